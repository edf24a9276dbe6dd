#include "qcmp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qcmp {

namespace {

std::vector<uint32_t> strip_trailing_zeros(std::vector<uint32_t> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

}  // namespace

Poly::Poly(std::vector<uint32_t> coeffs) : c_(strip_trailing_zeros(std::move(coeffs))) {}

Poly Poly::monomial(int exponent, uint32_t coeff) {
    if (coeff == 0) return Poly{};
    std::vector<uint32_t> c(static_cast<size_t>(exponent) + 1, 0);
    c[static_cast<size_t>(exponent)] = coeff;
    return Poly(std::move(c));
}

int poly_weight(const Poly& p) {
    int w = 0;
    for (uint32_t c : p.coeffs()) w += (c != 0);
    return w;
}

Poly poly_add(const Poly& a, const Poly& b, const FieldSpec& F) {
    std::vector<uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    }
    return Poly(std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b, const FieldSpec& F) {
    std::vector<uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    }
    return Poly(std::move(c));
}

Poly poly_scale(const Poly& a, uint32_t c, const FieldSpec& F) {
    std::vector<uint32_t> out(a.coeffs().size(), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = F.mul(a.coeffs()[i], c);
    return Poly(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b, const FieldSpec& F) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<uint32_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        uint32_t ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] = F.add(c[i + j], F.mul(ai, b.coeffs()[j]));
        }
    }
    return Poly(std::move(c));
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b, const FieldSpec& F) {
    if (b.is_zero()) throw ParseError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly::zero(), a};
    std::vector<uint32_t> rem(a.coeffs());
    std::vector<uint32_t> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
    uint32_t lead_inv = F.inv(b.coeffs().back());
    for (int i = a.degree(); i >= b.degree(); --i) {
        uint32_t coef = rem[static_cast<size_t>(i)];
        if (coef == 0) continue;
        uint32_t factor = F.mul(coef, lead_inv);
        quot[static_cast<size_t>(i - b.degree())] = factor;
        for (int j = 0; j <= b.degree(); ++j) {
            size_t pos = static_cast<size_t>(i - b.degree() + j);
            rem[pos] = F.sub(rem[pos], F.mul(factor, b.coeff(j)));
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool poly_divides(const Poly& a, const Poly& b, const FieldSpec& F) {
    if (a.is_zero()) return b.is_zero();
    return poly_divmod(b, a, F).remainder.is_zero();
}

Poly poly_monic(const Poly& a, const FieldSpec& F) {
    if (a.is_zero()) return a;
    uint32_t lead = a.coeffs().back();
    if (lead == 1) return a;
    return poly_scale(a, F.inv(lead), F);
}

Poly poly_gcd(const Poly& a, const Poly& b, const FieldSpec& F) {
    if (a.is_zero() && b.is_zero()) throw ParseError("gcd of two zero polynomials");
    Poly r = a, s = b;
    while (!s.is_zero()) {
        Poly rem = poly_divmod(r, s, F).remainder;
        r = s;
        s = rem;
    }
    return poly_monic(r, F);
}

PolyExtGcd poly_ext_gcd(const Poly& a, const Poly& b, const FieldSpec& F) {
    if (a.is_zero() && b.is_zero()) throw ParseError("gcd of two zero polynomials");
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(), u1 = Poly::zero();
    Poly v0 = Poly::zero(), v1 = Poly::one();
    while (!r1.is_zero()) {
        PolyDivMod dm = poly_divmod(r0, r1, F);
        Poly r2 = dm.remainder;
        Poly u2 = poly_sub(u0, poly_mul(dm.quotient, u1, F), F);
        Poly v2 = poly_sub(v0, poly_mul(dm.quotient, v1, F), F);
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    // scale so the gcd comes out monic
    uint32_t lead = r0.coeffs().back();
    if (lead != 1) {
        uint32_t s = F.inv(lead);
        r0 = poly_scale(r0, s, F);
        u0 = poly_scale(u0, s, F);
        v0 = poly_scale(v0, s, F);
    }
    return {r0, u0, v0};
}

Poly poly_mod_xm1(const Poly& a, int m, const FieldSpec& F) {
    if (a.degree() < m) return a;
    std::vector<uint32_t> c(static_cast<size_t>(m), 0);
    for (int i = 0; i <= a.degree(); ++i) {
        size_t pos = static_cast<size_t>(i % m);
        c[pos] = F.add(c[pos], a.coeff(i));
    }
    return Poly(std::move(c));
}

Poly xm_minus_1(int m, const FieldSpec& F) {
    std::vector<uint32_t> c(static_cast<size_t>(m) + 1, 0);
    c[0] = F.neg(1);
    c[static_cast<size_t>(m)] = 1;
    return Poly(std::move(c));
}

Poly parse_poly(std::string_view text, const FieldSpec& F) {
    // strip spaces up front; the grammar has none
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw ParseError("empty polynomial text");
    if (s == "0") return Poly::zero();

    std::vector<uint32_t> coeffs;
    auto add_term = [&](uint32_t coeff, int exponent) {
        if (exponent >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(exponent) + 1, 0);
        coeffs[static_cast<size_t>(exponent)] = F.add(coeffs[static_cast<size_t>(exponent)], coeff);
    };

    size_t i = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        i = 1;
    }
    while (true) {
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string_view term(s.data() + i, j - i);
        if (term.empty()) throw ParseError("empty term in polynomial text '" + s + "'");

        uint64_t coeff = 1;
        size_t pos = 0;
        bool explicit_coeff = false;
        while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) {
            coeff = (explicit_coeff ? coeff * 10 : 0) + static_cast<uint64_t>(term[pos] - '0');
            explicit_coeff = true;
            if (coeff > 0xFFFFFFFFull) throw ParseError("coefficient overflow in term '" + std::string(term) + "'");
            ++pos;
        }
        if (explicit_coeff && pos < term.size() && term[pos] == '*') ++pos;

        int exponent = 0;
        if (pos < term.size()) {
            if (term[pos] != 'x') throw ParseError("malformed term '" + std::string(term) + "'");
            ++pos;
            exponent = 1;
            if (pos < term.size()) {
                if (term[pos] != '^') throw ParseError("malformed term '" + std::string(term) + "'");
                ++pos;
                if (pos == term.size()) throw ParseError("missing exponent in term '" + std::string(term) + "'");
                uint64_t e = 0;
                while (pos < term.size()) {
                    if (!std::isdigit(static_cast<unsigned char>(term[pos]))) {
                        throw ParseError("exponent is not a non-negative integer in term '" + std::string(term) + "'");
                    }
                    e = e * 10 + static_cast<uint64_t>(term[pos] - '0');
                    if (e > 1000000) throw ParseError("exponent out of range in term '" + std::string(term) + "'");
                    ++pos;
                }
                exponent = static_cast<int>(e);
            }
        } else if (!explicit_coeff) {
            throw ParseError("malformed term '" + std::string(term) + "'");
        }

        uint32_t c = static_cast<uint32_t>(coeff % F.q());
        if (negative) c = F.neg(c);
        add_term(c, exponent);

        if (j == s.size()) break;
        negative = (s[j] == '-');
        i = j + 1;
        if (i == s.size()) throw ParseError("dangling sign in polynomial text '" + s + "'");
    }
    return Poly(std::move(coeffs));
}

std::string poly_to_text(const Poly& p, const FieldSpec& F) {
    (void)F;
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = p.degree(); e >= 0; --e) {
        uint32_t c = p.coeff(e);
        if (c == 0) continue;
        if (!first) out << '+';
        first = false;
        if (e == 0) {
            out << c;
        } else {
            if (c != 1) out << c << '*';
            if (e == 1) {
                out << 'x';
            } else {
                out << "x^" << e;
            }
        }
    }
    return out.str();
}

}  // namespace qcmp
