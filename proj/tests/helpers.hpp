#pragma once

#include <random>
#include <vector>

#include "qcmp/cyclic.hpp"
#include "qcmp/linear_code.hpp"
#include "qcmp/ring.hpp"

namespace qcmp::test {

// Independent reference for minimum distance: enumerate every combination
// of the given rows by plain base-q counting and direct summation. No Gray
// codes, no bit packing, no row reduction.
inline int naive_min_distance(const Matrix& rows, int n, const FieldSpec& F) {
    size_t k = rows.size();
    uint64_t total = 1;
    for (size_t i = 0; i < k; ++i) total *= F.q();
    int best = -1;
    for (uint64_t msg = 1; msg < total; ++msg) {
        Row cw(static_cast<size_t>(n), 0);
        uint64_t v = msg;
        for (size_t r = 0; r < k; ++r) {
            uint32_t digit = static_cast<uint32_t>(v % F.q());
            v /= F.q();
            if (digit == 0) continue;
            for (int c = 0; c < n; ++c) {
                cw[static_cast<size_t>(c)] = F.add(cw[static_cast<size_t>(c)], F.mul(digit, rows[r][static_cast<size_t>(c)]));
            }
        }
        int wt = 0;
        for (uint32_t x : cw) wt += (x != 0);
        if (wt > 0 && (best < 0 || wt < best)) best = wt;
    }
    return best;
}

// Schoolbook product of two coefficient vectors followed by exponent
// folding; reference for ring_mul.
inline Poly naive_ring_product(const Poly& a, const Poly& b, int m, const FieldSpec& F) {
    std::vector<uint32_t> c(static_cast<size_t>(m), 0);
    for (int i = 0; i <= a.degree(); ++i) {
        for (int j = 0; j <= b.degree(); ++j) {
            size_t pos = static_cast<size_t>((i + j) % m);
            c[pos] = F.add(c[pos], F.mul(a.coeff(i), b.coeff(j)));
        }
    }
    return Poly(std::move(c));
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree, const FieldSpec& F) {
    std::vector<uint32_t> c(static_cast<size_t>(max_degree) + 1, 0);
    for (uint32_t& v : c) v = static_cast<uint32_t>(rng() % F.q());
    return Poly(std::move(c));
}

inline RingElement random_unit(std::mt19937_64& rng, int m, const FieldSpec& F) {
    while (true) {
        RingElement e(random_poly(rng, m - 1, F), m, F);
        if (is_unit(e)) return e;
    }
}

// Simultaneous one-step cyclic shift inside each of the l length-m blocks.
inline Row block_shift(const Row& v, int l, int m) {
    Row out(v.size(), 0);
    for (int j = 0; j < l; ++j) {
        for (int c = 0; c < m; ++c) {
            out[static_cast<size_t>(j * m + (c + 1) % m)] = v[static_cast<size_t>(j * m + c)];
        }
    }
    return out;
}

inline LinearCode random_binary_code(std::mt19937_64& rng, int n, int k) {
    FieldSpec F(2);
    Matrix rows(static_cast<size_t>(k), Row(static_cast<size_t>(n), 0));
    for (Row& r : rows) {
        for (uint32_t& v : r) v = static_cast<uint32_t>(rng() & 1);
    }
    LinearCode code(F, n, std::move(rows));
    if (code.dimension() == 0) return random_binary_code(rng, n, k);
    return code;
}

}  // namespace qcmp::test
