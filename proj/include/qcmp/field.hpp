#pragma once

#include <cstdint>

#include "qcmp/errors.hpp"

namespace qcmp {

// The prime field F_q. Residues are plain uint32_t values in [0, q).
class FieldSpec {
  public:
    explicit FieldSpec(uint32_t q);

    uint32_t q() const noexcept { return q_; }

    uint32_t add(uint32_t a, uint32_t b) const noexcept {
        uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const noexcept { return a >= b ? a - b : a + q_ - b; }
    uint32_t neg(uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const noexcept {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % q_);
    }
    // Multiplicative inverse of a nonzero residue.
    uint32_t inv(uint32_t a) const;

    bool operator==(const FieldSpec&) const = default;

  private:
    uint32_t q_;
};

}  // namespace qcmp
