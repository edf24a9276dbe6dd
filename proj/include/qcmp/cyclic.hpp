#pragma once

#include <optional>
#include <vector>

#include "qcmp/linear_code.hpp"
#include "qcmp/ring.hpp"

namespace qcmp {

// Dimension bound for exhaustive minimum-weight enumeration of a cyclic
// code; above it the table stores the distance as unknown.
inline constexpr int kDefaultEnumCap = 28;

// Cyclic code of length m over F_q given by a generator polynomial f
// dividing x^m - 1; dimension k = m - deg f. Values are immutable; the
// minimum-weight cache travels in copies made by with_min_weight().
struct CyclicCode {
    int m;
    FieldSpec field;
    Poly f;
    int k;

    std::optional<int> min_weight;  // exact d once computed
    std::vector<Poly> min_words;    // every multiplier h, deg h < k, with wt(h*f) == d
};

// Validates f | x^m - 1 (errors with NotADivisor otherwise).
CyclicCode make_cyclic(const Poly& f, int m, const FieldSpec& F);

// All nonzero cyclic codes of length m: the 2^t - 1 proper divisor products
// of the t irreducible factors of x^m - 1 (x^m - 1 itself excluded), sorted
// by (deg f, text).
std::vector<CyclicCode> enumerate_divisors(int m, const FieldSpec& F);

// k x m matrix whose row i is the coefficient vector of x^i * f.
LinearCode generator_matrix(const CyclicCode& c);

struct MinWeightResult {
    int d = 0;
    std::vector<Poly> words;  // sorted by (degree, coefficients ascending)
};

// Exact minimum nonzero weight and every multiplier attaining it, by
// exhaustive enumeration of all q^k - 1 messages. Gray-code walk with
// packed words for q = 2. Errors with CapExceeded when k > enum_cap.
MinWeightResult min_weight_words(const CyclicCode& c, int enum_cap = kDefaultEnumCap, int workers = 0);

// Copy of c with the minimum-weight cache filled.
CyclicCode with_min_weight(const CyclicCode& c, int enum_cap = kDefaultEnumCap, int workers = 0);

// True iff a.f divides b.f, i.e. code(b) is a subcode of code(a).
bool is_nested(const CyclicCode& a, const CyclicCode& b);

}  // namespace qcmp
