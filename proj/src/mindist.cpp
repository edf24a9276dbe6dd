#include "qcmp/mindist.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace qcmp {

namespace {

struct RangeBest {
    int weight = INT32_MAX;
    uint64_t index = 0;  // engine index i of the first minimal codeword
};

// Tight kernel: W codeword words held in registers, one row-XOR plus
// popcount per Gray step.
template <int W>
RangeBest scan_fixed(const uint64_t* rows, uint64_t from, uint64_t to) {
    uint64_t cw[W] = {};
    uint64_t g = from ^ (from >> 1);
    for (int r = 0; g != 0; ++r, g >>= 1) {
        if (g & 1) {
            for (int w = 0; w < W; ++w) cw[w] ^= rows[r * W + w];
        }
    }
    RangeBest best;
    for (uint64_t i = from; i < to; ++i) {
        if (i != from) {
            const uint64_t* row = rows + static_cast<size_t>(std::countr_zero(i)) * W;
            for (int w = 0; w < W; ++w) cw[w] ^= row[w];
        }
        int wt = 0;
        for (int w = 0; w < W; ++w) wt += std::popcount(cw[w]);
        if (wt < best.weight) {
            best.weight = wt;
            best.index = i;
        }
    }
    return best;
}

RangeBest scan_general(const std::vector<uint64_t>& rows, int nwords, uint64_t from, uint64_t to) {
    std::vector<uint64_t> cw(static_cast<size_t>(nwords), 0);
    uint64_t g = from ^ (from >> 1);
    for (int r = 0; g != 0; ++r, g >>= 1) {
        if (g & 1) {
            for (int w = 0; w < nwords; ++w) cw[static_cast<size_t>(w)] ^= rows[static_cast<size_t>(r * nwords + w)];
        }
    }
    RangeBest best;
    for (uint64_t i = from; i < to; ++i) {
        if (i != from) {
            size_t base = static_cast<size_t>(std::countr_zero(i)) * static_cast<size_t>(nwords);
            for (int w = 0; w < nwords; ++w) cw[static_cast<size_t>(w)] ^= rows[base + static_cast<size_t>(w)];
        }
        int wt = 0;
        for (int w = 0; w < nwords; ++w) wt += std::popcount(cw[static_cast<size_t>(w)]);
        if (wt < best.weight) {
            best.weight = wt;
            best.index = i;
        }
    }
    return best;
}

RangeBest scan_range(const std::vector<uint64_t>& rows, int nwords, uint64_t from, uint64_t to) {
    switch (nwords) {
        case 1: return scan_fixed<1>(rows.data(), from, to);
        case 2: return scan_fixed<2>(rows.data(), from, to);
        case 3: return scan_fixed<3>(rows.data(), from, to);
        default: return scan_general(rows, nwords, from, to);
    }
}

// The enumeration basis: the stored rows when they are independent,
// otherwise the nonzero rows of the reduced echelon form (same row space).
Matrix enumeration_basis(const LinearCode& code) {
    if (code.dimension() == static_cast<int>(code.rows().size())) return code.rows();
    return rank_and_reduce(code.rows(), code.n(), code.field()).rref;
}

DistanceReport binary_exhaustive(const LinearCode& code, const Matrix& basis, int workers) {
    int k = static_cast<int>(basis.size());
    int n = code.n();
    int nwords = (n + 63) / 64;
    std::vector<uint64_t> rows(static_cast<size_t>(k) * static_cast<size_t>(nwords), 0);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < n; ++c) {
            if (basis[static_cast<size_t>(r)][static_cast<size_t>(c)]) {
                rows[static_cast<size_t>(r * nwords + c / 64)] |= uint64_t{1} << (c % 64);
            }
        }
    }

    uint64_t total = uint64_t{1} << k;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    uint64_t span = total - 1;

    RangeBest best;
    if (workers == 1 || span < (uint64_t{1} << 16)) {
        best = scan_range(rows, nwords, 1, total);
    } else {
        std::vector<RangeBest> parts(static_cast<size_t>(workers));
        std::vector<std::thread> threads;
        uint64_t chunk = span / static_cast<uint64_t>(workers);
        for (int t = 0; t < workers; ++t) {
            uint64_t from = 1 + chunk * static_cast<uint64_t>(t);
            uint64_t to = (t == workers - 1) ? total : from + chunk;
            threads.emplace_back([&rows, nwords, from, to, &parts, t] {
                parts[static_cast<size_t>(t)] = scan_range(rows, nwords, from, to);
            });
        }
        for (std::thread& th : threads) th.join();
        for (const RangeBest& p : parts) {
            if (p.weight < best.weight || (p.weight == best.weight && p.index < best.index)) {
                best = p;
            }
        }
    }

    // rebuild the witness from its message
    uint64_t message = best.index ^ (best.index >> 1);
    Row witness(static_cast<size_t>(n), 0);
    for (int r = 0; r < k; ++r) {
        if (message & (uint64_t{1} << r)) {
            for (int c = 0; c < n; ++c) {
                witness[static_cast<size_t>(c)] ^= basis[static_cast<size_t>(r)][static_cast<size_t>(c)];
            }
        }
    }
    std::string engine = "gray-w" + std::to_string(nwords);
    return DistanceReport{best.weight, std::move(witness), message, span, std::move(engine)};
}

uint64_t checked_pow(uint64_t q, int k, uint64_t limit) {
    uint64_t v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > limit / q) return limit + 1;
        v *= q;
    }
    return v;
}

DistanceReport generic_exhaustive(const LinearCode& code, const Matrix& basis, uint64_t cap) {
    const FieldSpec& F = code.field();
    int k = static_cast<int>(basis.size());
    int n = code.n();
    uint64_t total = checked_pow(F.q(), k, cap);
    if (total > cap) {
        throw BudgetExceeded("q^k exceeds the configured cap " + std::to_string(cap));
    }

    // odometer with incremental codeword updates
    std::vector<uint32_t> digits(static_cast<size_t>(k), 0);
    Row cw(static_cast<size_t>(n), 0);
    RangeBest best;
    Row witness;
    uint64_t msg_index = 0;
    auto add_row = [&](size_t r) {
        for (int c = 0; c < n; ++c) {
            cw[static_cast<size_t>(c)] = F.add(cw[static_cast<size_t>(c)], basis[r][static_cast<size_t>(c)]);
        }
    };
    while (true) {
        size_t pos = 0;
        while (pos < digits.size() && digits[pos] == F.q() - 1) {
            digits[pos] = 0;
            add_row(pos);  // -(q-1) == 1 mod q
            ++pos;
        }
        if (pos == digits.size()) break;
        digits[pos] += 1;
        add_row(pos);
        ++msg_index;

        int wt = 0;
        for (uint32_t v : cw) wt += (v != 0);
        if (wt < best.weight) {
            best.weight = wt;
            best.index = msg_index;
            witness = cw;
        }
    }
    return DistanceReport{best.weight, std::move(witness), best.index, total - 1, "odometer"};
}

}  // namespace

DistanceReport min_distance_exhaustive(const LinearCode& code, int workers, uint64_t generic_cap) {
    Matrix basis = enumeration_basis(code);
    if (basis.empty()) throw EmptyCode("code has rank 0, no nonzero codeword exists");
    if (code.field().q() == 2) {
        if (static_cast<int>(basis.size()) > kBinaryDimensionGuard) {
            throw BudgetExceeded("k=" + std::to_string(basis.size()) + " above the binary guard " +
                                 std::to_string(kBinaryDimensionGuard));
        }
        return binary_exhaustive(code, basis, workers);
    }
    return generic_exhaustive(code, basis, generic_cap);
}

int min_distance_oracle(const LinearCode& code) {
    const FieldSpec& F = code.field();
    Matrix basis = enumeration_basis(code);
    int k = static_cast<int>(basis.size());
    if (k == 0) throw EmptyCode("code has rank 0, no nonzero codeword exists");
    uint64_t total = checked_pow(F.q(), k, uint64_t{1} << 20);
    if (total > (uint64_t{1} << 20)) throw BudgetExceeded("oracle is limited to q^k <= 2^20");

    int best = INT32_MAX;
    for (uint64_t msg = 1; msg < total; ++msg) {
        // expand msg in base q, multiply by the basis the long way
        Row cw(static_cast<size_t>(code.n()), 0);
        uint64_t v = msg;
        for (int r = 0; r < k; ++r) {
            uint32_t digit = static_cast<uint32_t>(v % F.q());
            v /= F.q();
            if (digit == 0) continue;
            for (int c = 0; c < code.n(); ++c) {
                cw[static_cast<size_t>(c)] =
                    F.add(cw[static_cast<size_t>(c)], F.mul(digit, basis[static_cast<size_t>(r)][static_cast<size_t>(c)]));
            }
        }
        int wt = 0;
        for (uint32_t x : cw) wt += (x != 0);
        best = std::min(best, wt);
    }
    return best;
}

}  // namespace qcmp
