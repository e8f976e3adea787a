#include "qwa/literal.hpp"

#include <cctype>
#include <sstream>

#include "qwa/detail/qpoly.hpp"

namespace qwa {

namespace {

// ---------------------------------------------------------------- parsing

class Parser {
public:
    Parser(std::string_view text, ScalarFieldPtr field, bool allow_h)
        : text_(text), field_(std::move(field)), allow_h_(allow_h) {}

    LaurentPoly parse() {
        LaurentPoly num = parse_poly();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            LaurentPoly den = parse_poly();
            num = divide(num, den);
        }
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return num;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_digit() {
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }

    mpz_class parse_digits() {
        std::size_t start = pos_;
        while (at_digit()) ++pos_;
        if (pos_ == start) fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    long parse_signed_int() {
        skip_ws();
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
        }
        skip_ws();
        mpz_class v = parse_digits();
        if (!v.fits_slong_p()) fail("integer out of range");
        long r = v.get_si();
        return neg ? -r : r;
    }

    bool atom_starts() {
        char c = peek();
        return c == 'q' || c == 'z' || c == '(' || (allow_h_ && c == 'h');
    }

    LaurentPoly parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = parse_poly();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 'q' || c == 'z' || c == 'h') {
            ++pos_;
            long exp = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                exp = parse_signed_int();
            }
            if (c == 'q')
                return LaurentPoly::constant(field_, 1, field_->q_power(exp));
            if (c == 'z')
                return LaurentPoly::constant(field_, 1, field_->zeta_power(exp));
            if (!allow_h_) fail("'h' is not allowed in a scalar literal");
            if (exp < -1000000 || exp > 1000000) fail("h exponent out of range");
            return LaurentPoly::var_power(field_, 1, 0, static_cast<int>(exp));
        }
        fail("expected an atom");
    }

    LaurentPoly parse_term() {
        skip_ws();
        LaurentPoly value = LaurentPoly::one(field_, 1);
        bool have_any = false;
        if (at_digit()) {
            mpz_class n = parse_digits();
            mpz_class d = 1;
            if (peek() == '/' && pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                d = parse_digits();
                if (d == 0) fail("zero denominator in rational");
            }
            Rational r(n, d);
            r.canonicalize();
            value = value.scalar_mul(field_->from_rational(r));
            have_any = true;
        }
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (!atom_starts()) fail("expected an atom after '*'");
            }
            if (!atom_starts()) break;
            value = value * parse_atom();
            have_any = true;
        }
        if (!have_any) fail("expected a term");
        return value;
    }

    LaurentPoly parse_poly() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (peek() == '-') sign = -1;
            ++pos_;
        }
        LaurentPoly acc = parse_term();
        if (sign < 0) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            LaurentPoly t = parse_term();
            acc = c == '-' ? acc - t : acc + t;
        }
        return acc;
    }

    LaurentPoly divide(const LaurentPoly& num, const LaurentPoly& den) {
        if (den.is_zero()) fail("division by zero");
        if (auto m = den.as_monomial()) {
            return num * LaurentPoly::monomial(field_, m->first.inv(),
                                               ExpVec{-m->second[0]});
        }
        auto q = LaurentPoly::divide_exact(num, den);
        if (!q) fail("denominator does not divide the numerator");
        return *q;
    }

    std::string_view text_;
    ScalarFieldPtr field_;
    bool allow_h_;
    std::size_t pos_ = 0;
};

// --------------------------------------------------------------- printing

std::string rational_str(const Rational& r) { return r.get_str(); }

// One printable product: optional rational magnitude and variable powers.
std::string join_product(const Rational& mag, const std::string& zpart,
                         const std::string& qpart, const std::string& hpart) {
    std::string out;
    auto append = [&out](const std::string& piece) {
        if (piece.empty()) return;
        if (!out.empty()) out += "*";
        out += piece;
    };
    if (mag != 1 || (zpart.empty() && qpart.empty() && hpart.empty()))
        append(rational_str(mag));
    append(zpart);
    append(qpart);
    append(hpart);
    return out;
}

std::string power_str(char var, int exp) {
    if (exp == 0) return "";
    std::string s(1, var);
    if (exp != 1) s += "^" + std::to_string(exp);
    return s;
}

// Polynomial in zeta, rational coefficients, descending powers.
std::string print_zpoly(const CycloElem& c) {
    std::string out;
    const auto& v = c.coeffs();
    for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k) {
        if (v[k] == 0) continue;
        Rational mag = v[k] < 0 ? Rational(-v[k]) : v[k];
        std::string body = join_product(mag, power_str('z', k), "", "");
        if (out.empty())
            out = (v[k] < 0 ? "-" : "") + body;
        else
            out += (v[k] < 0 ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

// A single q^k term with cyclotomic coefficient; hpart optionally appends a
// power of h. Returns the body and whether a minus sign was factored out.
std::pair<std::string, bool> qterm_str(const CycloElem& c, int k,
                                       const std::string& hpart) {
    const auto& v = c.coeffs();
    int nonzero = 0, idx = 0;
    for (int j = 0; j < static_cast<int>(v.size()); ++j) {
        if (v[j] != 0) {
            ++nonzero;
            idx = j;
        }
    }
    if (nonzero == 1) {
        bool neg = v[idx] < 0;
        Rational mag = neg ? Rational(-v[idx]) : v[idx];
        return {join_product(mag, power_str('z', idx), power_str('q', k), hpart),
                neg};
    }
    std::string body = "(" + print_zpoly(c) + ")";
    std::string tail = join_product(Rational(1), "", power_str('q', k), hpart);
    if (tail != "1") body += "*" + tail;
    return {body, false};
}

// Polynomial in q over Q(zeta), descending powers.
std::string print_qpoly(const detail::QPoly& p, const std::string& hpart = "") {
    std::string out;
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
        if (p[k].is_zero()) continue;
        auto [body, neg] = qterm_str(p[k], k, hpart);
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

Scalar parse_scalar(std::string_view text, const ScalarFieldPtr& field) {
    LaurentPoly p = Parser(text, field, /*allow_h=*/false).parse();
    if (p.is_zero()) return field->zero();
    return p.terms().begin()->second;
}

LaurentPoly parse_laurent1(std::string_view text, const ScalarFieldPtr& field) {
    return Parser(text, field, /*allow_h=*/true).parse();
}

std::string to_literal(const Scalar& s) {
    if (s.is_zero()) return "0";
    std::string num = print_qpoly(s.num());
    if (s.den().size() == 1 && s.den()[0].is_one()) return num;
    return "(" + num + ")/(" + print_qpoly(s.den()) + ")";
}

std::string to_literal1(const LaurentPoly& p) {
    if (p.arity() != 1)
        throw AlgebraMismatch("to_literal1 expects a univariate polynomial");
    if (p.is_zero()) return "0";
    const auto& cf = p.field()->cyclotomic();

    // common monic denominator over q
    detail::QPoly den{CycloElem::one(cf)};
    for (const auto& [e, c] : p.terms())
        den = detail::lcm_monic(den, c.den(), cf);

    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        detail::QPoly numer =
            detail::mul(c.num(), detail::divrem(den, c.den(), cf).first, cf);
        std::string hpart = power_str('h', e[0]);
        std::string piece;
        bool neg = false;
        if (numer.size() == 1) {
            auto [body, n] = qterm_str(numer[0], 0, hpart);
            piece = body;
            neg = n;
        } else {
            piece = "(" + print_qpoly(numer) + ")";
            if (!hpart.empty()) piece += "*" + hpart;
        }
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    bool den_one = den.size() == 1 && den[0].is_one();
    if (den_one) return out;
    return "(" + out + ")/(" + print_qpoly(den) + ")";
}

}  // namespace qwa
