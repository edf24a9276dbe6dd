#pragma once

#include <vector>

#include "qcmp/poly.hpp"

namespace qcmp {

// Residue class in F_q[x]/(x^m - 1), stored fully reduced (degree < m).
class RingElement {
  public:
    RingElement(Poly p, int m, const FieldSpec& F);

    const Poly& poly() const noexcept { return poly_; }
    int m() const noexcept { return m_; }
    const FieldSpec& field() const noexcept { return field_; }

    bool is_zero() const noexcept { return poly_.is_zero(); }
    bool is_one() const noexcept { return poly_ == Poly::one(); }
    bool is_constant() const noexcept { return poly_.degree() <= 0; }

    bool operator==(const RingElement& other) const {
        return m_ == other.m_ && field_ == other.field_ && poly_ == other.poly_;
    }

  private:
    Poly poly_;
    int m_;
    FieldSpec field_;
};

RingElement ring_zero(int m, const FieldSpec& F);
RingElement ring_one(int m, const FieldSpec& F);

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);

// Multiplication by x^t, i.e. the t-step cyclic shift of the coefficient
// vector.
RingElement ring_shift(const RingElement& a, int t);

// True iff gcd(a, x^m - 1) = 1, i.e. a is invertible.
bool is_unit(const RingElement& a);

// Inverse of a unit, by the extended Euclidean algorithm.
RingElement ring_inverse(const RingElement& a);

// Complete set of monic irreducible factors of x^m - 1 over F_q, via
// q-cyclotomic cosets mod m and minimal-polynomial assembly in the
// splitting field F_{q^e}, e = ord_m(q). Requires gcd(m, q) = 1 (squarefree
// modulus); factors come back sorted by (degree, text) and multiply back to
// x^m - 1 exactly.
std::vector<Poly> factor_xm_minus_1(int m, const FieldSpec& F);

}  // namespace qcmp
