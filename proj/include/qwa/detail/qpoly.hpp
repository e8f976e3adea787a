#pragma once

#include <utility>
#include <vector>

#include "qwa/cyclotomic.hpp"

namespace qwa::detail {

// Dense polynomials in q over Q(zeta_L), ascending degree, trailing zeros
// trimmed. Shared between the scalar field and the literal printer.
using QPoly = std::vector<CycloElem>;

inline void trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r = a.size() >= b.size() ? a : b;
    const QPoly& s = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    trim(r);
    return r;
}

inline QPoly mul(const QPoly& a, const QPoly& b, const CycloFieldPtr& cf) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, CycloElem::zero(cf));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

inline QPoly negate(QPoly p) {
    for (auto& c : p) c = -c;
    return p;
}

inline std::pair<QPoly, QPoly> divrem(QPoly a, const QPoly& b,
                                      const CycloFieldPtr& cf) {
    trim(a);
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    QPoly q;
    if (a.size() >= b.size()) {
        q.assign(a.size() - b.size() + 1, CycloElem::zero(cf));
        CycloElem lead_inv = b.back().inv();
        for (int i = static_cast<int>(a.size()) - 1;
             i >= static_cast<int>(b.size()) - 1; --i) {
            if (a[i].is_zero()) continue;
            CycloElem f = a[i] * lead_inv;
            int shift = i - (static_cast<int>(b.size()) - 1);
            q[shift] = f;
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = a[shift + j] - f * b[j];
        }
    }
    trim(a);
    return {std::move(q), std::move(a)};
}

inline QPoly gcd_monic(QPoly a, QPoly b, const CycloFieldPtr& cf) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divrem(std::move(a), b, cf);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        CycloElem lead_inv = a.back().inv();
        for (auto& c : a) c = c * lead_inv;
    }
    return a;
}

inline QPoly lcm_monic(const QPoly& a, const QPoly& b, const CycloFieldPtr& cf) {
    QPoly g = gcd_monic(a, b, cf);
    QPoly l = divrem(mul(a, b, cf), g, cf).first;
    if (!l.empty() && !l.back().is_one()) {
        CycloElem lead_inv = l.back().inv();
        for (auto& c : l) c = c * lead_inv;
    }
    return l;
}

}  // namespace qwa::detail
