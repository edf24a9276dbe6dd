#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcmp/field.hpp"

namespace qcmp {

// Dense polynomial over F_q; coefficient i belongs to x^i. Always stored
// normalized: the vector carries no trailing zeros, the zero polynomial is
// the empty vector and reports degree() == kZeroDegree.
class Poly {
  public:
    // Stands in for the "minus infinity" degree of the zero polynomial.
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<uint32_t> coeffs);

    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly({1}); }
    static Poly monomial(int exponent, uint32_t coeff = 1);

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    uint32_t coeff(int i) const noexcept {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<uint32_t>& coeffs() const noexcept { return c_; }

    bool operator==(const Poly&) const = default;

  private:
    std::vector<uint32_t> c_;
};

// Number of nonzero coefficients (Hamming weight of the coefficient vector).
int poly_weight(const Poly& p);

Poly poly_add(const Poly& a, const Poly& b, const FieldSpec& F);
Poly poly_sub(const Poly& a, const Poly& b, const FieldSpec& F);
Poly poly_scale(const Poly& a, uint32_t c, const FieldSpec& F);
Poly poly_mul(const Poly& a, const Poly& b, const FieldSpec& F);

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};
PolyDivMod poly_divmod(const Poly& a, const Poly& b, const FieldSpec& F);

// True iff a divides b exactly (a nonzero).
bool poly_divides(const Poly& a, const Poly& b, const FieldSpec& F);

Poly poly_monic(const Poly& a, const FieldSpec& F);

// Monic greatest common divisor via the Euclidean algorithm. Errors when
// both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b, const FieldSpec& F);

struct PolyExtGcd {
    Poly g;  // monic gcd
    Poly u;  // g = u*a + v*b
    Poly v;
};
PolyExtGcd poly_ext_gcd(const Poly& a, const Poly& b, const FieldSpec& F);

// Reduction mod x^m - 1 by folding exponents (x^e -> x^(e mod m)).
Poly poly_mod_xm1(const Poly& a, int m, const FieldSpec& F);

// The modulus x^m - 1 itself.
Poly xm_minus_1(int m, const FieldSpec& F);

// Text format: terms `x^E`, `x`, `1` joined by `+`, descending exponent on
// output, no spaces. Coefficients other than 1 (only possible for q > 2)
// are written `c*x^E`. Input additionally tolerates spaces, `-` signs and
// redundant terms, which accumulate mod q. The zero polynomial reads and
// writes as `0`.
Poly parse_poly(std::string_view text, const FieldSpec& F);
std::string poly_to_text(const Poly& p, const FieldSpec& F);

}  // namespace qcmp
