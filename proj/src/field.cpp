#include "qcmp/field.hpp"

namespace qcmp {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

FieldSpec::FieldSpec(uint32_t q) : q_(q) {
    if (!is_prime(q)) {
        throw ParseError("field cardinality must be a prime, got " + std::to_string(q));
    }
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) throw NotAUnit("0 has no inverse in F_" + std::to_string(q_));
    // extended Euclid on (a, q)
    int64_t t = 0, new_t = 1;
    int64_t r = q_, new_r = a;
    while (new_r != 0) {
        int64_t quot = r / new_r;
        int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += q_;
    return static_cast<uint32_t>(t);
}

}  // namespace qcmp
