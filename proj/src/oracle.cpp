#include "qwa/oracle.hpp"

#include <optional>

namespace qwa {

WordSum word_of_element(const GwaElement& a) {
    const auto& alg = a.algebra();
    WordSum ws;
    for (const auto& [grade, coeff] : a.components()) {
        for (const auto& [exps, c] : coeff.terms()) {
            FreeWord w;
            for (int i = 0; i < alg->n; ++i) {
                for (int k = 0; k < exps[i]; ++k) w.push_back({LetterKind::H, i});
                for (int k = 0; k < -exps[i]; ++k) w.push_back({LetterKind::HInv, i});
                for (int k = 0; k < grade[i]; ++k) w.push_back({LetterKind::X, i});
                for (int k = 0; k < -grade[i]; ++k) w.push_back({LetterKind::Y, i});
            }
            ws.terms.emplace_back(c, std::move(w));
        }
    }
    return ws;
}

namespace {

int letter_class(LetterKind k) {
    switch (k) {
        case LetterKind::H: return 0;
        case LetterKind::HInv: return 1;
        case LetterKind::X: return 2;
        case LetterKind::Y: return 3;
    }
    return 0;
}

bool is_redex(const FreeLetter& a, const FreeLetter& b) {
    if (a.factor != b.factor) return a.factor > b.factor;
    auto ka = a.kind, kb = b.kind;
    if (ka == LetterKind::X && kb == LetterKind::H) return true;
    if (ka == LetterKind::Y && kb == LetterKind::H) return true;
    if (ka == LetterKind::X && kb == LetterKind::HInv) return true;
    if (ka == LetterKind::Y && kb == LetterKind::HInv) return true;
    if (ka == LetterKind::H && kb == LetterKind::HInv) return true;
    if (ka == LetterKind::HInv && kb == LetterKind::H) return true;
    if (ka == LetterKind::X && kb == LetterKind::Y) return true;
    if (ka == LetterKind::Y && kb == LetterKind::X) return true;
    return false;
}

FreeWord without_pair(const FreeWord& w, std::size_t p) {
    FreeWord r(w.begin(), w.begin() + p);
    r.insert(r.end(), w.begin() + p + 2, w.end());
    return r;
}

FreeWord with_pair_swapped(const FreeWord& w, std::size_t p) {
    FreeWord r = w;
    std::swap(r[p], r[p + 1]);
    return r;
}

// Replaces the pair at p by a_d(alpha h_i): one word with d h-letters
// (coefficient alpha^d) and one with the pair deleted (coefficient -1).
void expand_defining(std::vector<std::pair<Scalar, FreeWord>>& out,
                     const Scalar& coeff, const FreeWord& w, std::size_t p,
                     int factor, const Scalar& alpha, int d) {
    FreeWord with_h(w.begin(), w.begin() + p);
    for (int k = 0; k < d; ++k) with_h.push_back({LetterKind::H, factor});
    with_h.insert(with_h.end(), w.begin() + p + 2, w.end());
    out.emplace_back(coeff * alpha.pow(d), std::move(with_h));
    out.emplace_back(-coeff, without_pair(w, p));
}

// Fires the redex at position p, appending the replacement terms.
void apply_rule(std::vector<std::pair<Scalar, FreeWord>>& out, const AlgebraPtr& alg,
                const Scalar& coeff, const FreeWord& w, std::size_t p) {
    const FreeLetter a = w[p], b = w[p + 1];
    if (a.factor != b.factor) {
        out.emplace_back(coeff, with_pair_swapped(w, p));
        return;
    }
    const int i = a.factor;
    const Scalar qi = alg->q_power(i, 1);
    switch (letter_class(a.kind) * 4 + letter_class(b.kind)) {
        case 2 * 4 + 0:  // x h -> q h x
            out.emplace_back(coeff * qi, with_pair_swapped(w, p));
            break;
        case 3 * 4 + 0:  // y h -> q^-1 h y
            out.emplace_back(coeff * qi.inv(), with_pair_swapped(w, p));
            break;
        case 2 * 4 + 1:  // x H -> q^-1 H x
            out.emplace_back(coeff * qi.inv(), with_pair_swapped(w, p));
            break;
        case 3 * 4 + 1:  // y H -> q H y
            out.emplace_back(coeff * qi, with_pair_swapped(w, p));
            break;
        case 0 * 4 + 1:  // h H -> 1
        case 1 * 4 + 0:  // H h -> 1
            out.emplace_back(coeff, without_pair(w, p));
            break;
        case 2 * 4 + 3:  // x y -> a_d(q h)
            expand_defining(out, coeff, w, p, i, qi, alg->d);
            break;
        case 3 * 4 + 2:  // y x -> a_d(h)
            expand_defining(out, coeff, w, p, i, alg->field->one(), alg->d);
            break;
        default:
            throw Error("oracle: no rule for this pair");
    }
}

std::optional<std::size_t> first_redex(const FreeWord& w) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (is_redex(w[p], w[p + 1])) return p;
    return std::nullopt;
}

GwaElement rewrite_impl(const WordSum& ws, const AlgebraPtr& alg,
                        std::mt19937_64* rng) {
    std::vector<std::pair<Scalar, FreeWord>> work = ws.terms;
    GwaElement result = GwaElement::zero(alg);
    while (!work.empty()) {
        // pick a term, deterministically or at random
        std::size_t ti = 0;
        if (rng) ti = (*rng)() % work.size();
        auto [coeff, w] = work[ti];
        work.erase(work.begin() + ti);
        if (coeff.is_zero()) continue;

        std::optional<std::size_t> p;
        if (rng) {
            std::vector<std::size_t> redexes;
            for (std::size_t q = 0; q + 1 < w.size(); ++q)
                if (is_redex(w[q], w[q + 1])) redexes.push_back(q);
            if (!redexes.empty()) p = redexes[(*rng)() % redexes.size()];
        } else {
            p = first_redex(w);
        }

        if (!p) {
            // fully normal: read off grade and h-exponents per factor
            GradeVec grade(alg->n, 0);
            ExpVec exps(alg->n, 0);
            for (const auto& letter : w) {
                switch (letter.kind) {
                    case LetterKind::H: exps[letter.factor] += 1; break;
                    case LetterKind::HInv: exps[letter.factor] -= 1; break;
                    case LetterKind::X: grade[letter.factor] += 1; break;
                    case LetterKind::Y: grade[letter.factor] -= 1; break;
                }
            }
            result.add_component(
                grade, LaurentPoly::monomial(alg->field, coeff, std::move(exps)));
            continue;
        }
        apply_rule(work, alg, coeff, w, *p);
    }
    return result;
}

}  // namespace

GwaElement rewrite_to_normal_form(const WordSum& ws, const AlgebraPtr& alg) {
    return rewrite_impl(ws, alg, nullptr);
}

GwaElement rewrite_to_normal_form(const WordSum& ws, const AlgebraPtr& alg,
                                  std::mt19937_64& rng) {
    return rewrite_impl(ws, alg, &rng);
}

}  // namespace qwa
