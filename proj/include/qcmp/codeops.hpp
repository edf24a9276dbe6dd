#pragma once

#include "qcmp/linear_code.hpp"

namespace qcmp {

// Coordinate positions are 1-based on every external surface.

// Delete coordinate pos from every codeword.
LinearCode puncture(const LinearCode& code, int pos);

// Subcode of codewords with symbol 0 at pos, then coordinate pos deleted.
LinearCode shorten(const LinearCode& code, int pos);

// Append one overall parity coordinate (sum of all n symbols); q = 2 only.
LinearCode extend(const LinearCode& code);

// Row-space equality via canonical reduced echelon forms.
bool same_code(const LinearCode& a, const LinearCode& b);

}  // namespace qcmp
