#pragma once

#include <cstdint>
#include <string>

#include "qcmp/linear_code.hpp"

namespace qcmp {

// Hard dimension guard for the binary Gray-code engine: 2^34 steps is the
// largest enumeration this tool will attempt.
inline constexpr int kBinaryDimensionGuard = 34;

// Default message-count cap for fields beyond F_2.
inline constexpr uint64_t kGenericMessageCap = uint64_t{1} << 22;

struct DistanceReport {
    int d = 0;
    Row witness;                      // one codeword of weight d
    uint64_t witness_message = 0;     // message index of the witness (basis order)
    uint64_t messages_enumerated = 0; // q^k - 1
    std::string engine;
};

// Exact minimum distance over all q^k - 1 nonzero messages.
//
// For q = 2 the engine walks messages in Gray-code order: one row-XOR and
// one popcount per step over bit-packed codeword words. The message space
// splits into contiguous Gray ranges across workers, each seeded with the
// codeword at its range start; the reported witness is the weight-minimal
// codeword of smallest engine index, so the result does not depend on the
// worker count. workers <= 0 selects the hardware parallelism.
//
// Errors with BudgetExceeded when k > 34 (q = 2) or q^k > generic_cap.
DistanceReport min_distance_exhaustive(const LinearCode& code, int workers = 0,
                                       uint64_t generic_cap = kGenericMessageCap);

// Independent reference: multiplies every message by G directly, no
// incremental tricks. Guarded at q^k <= 2^20.
int min_distance_oracle(const LinearCode& code);

}  // namespace qcmp
