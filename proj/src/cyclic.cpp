#include "qcmp/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace qcmp {

CyclicCode make_cyclic(const Poly& f, int m, const FieldSpec& F) {
    if (f.is_zero()) throw NotADivisor("the zero polynomial generates no cyclic code");
    if (f.degree() >= m) {
        throw NotADivisor("deg f = " + std::to_string(f.degree()) + " must be below m = " + std::to_string(m));
    }
    if (!poly_divides(f, xm_minus_1(m, F), F)) {
        throw NotADivisor(poly_to_text(f, F) + " does not divide x^" + std::to_string(m) + "-1");
    }
    Poly monic = poly_monic(f, F);
    return CyclicCode{m, F, monic, m - monic.degree(), std::nullopt, {}};
}

std::vector<CyclicCode> enumerate_divisors(int m, const FieldSpec& F) {
    std::vector<Poly> factors = factor_xm_minus_1(m, F);
    size_t t = factors.size();
    if (t > 24) throw CapExceeded("x^m-1 has too many irreducible factors to enumerate divisors");
    std::vector<CyclicCode> codes;
    codes.reserve((size_t{1} << t) - 1);
    for (uint32_t mask = 0; mask + 1 < (uint32_t{1} << t); ++mask) {
        Poly f = Poly::one();
        for (size_t i = 0; i < t; ++i) {
            if (mask & (uint32_t{1} << i)) f = poly_mul(f, factors[i], F);
        }
        codes.push_back(make_cyclic(f, m, F));
    }
    std::sort(codes.begin(), codes.end(), [&](const CyclicCode& a, const CyclicCode& b) {
        if (a.f.degree() != b.f.degree()) return a.f.degree() < b.f.degree();
        return poly_to_text(a.f, F) < poly_to_text(b.f, F);
    });
    return codes;
}

LinearCode generator_matrix(const CyclicCode& c) {
    if (c.k < 1) throw DimensionMismatch("cyclic code has dimension 0");
    Matrix rows;
    rows.reserve(static_cast<size_t>(c.k));
    RingElement base(c.f, c.m, c.field);
    for (int i = 0; i < c.k; ++i) {
        RingElement shifted = ring_shift(base, i);
        Row r(static_cast<size_t>(c.m), 0);
        for (int j = 0; j <= shifted.poly().degree(); ++j) r[static_cast<size_t>(j)] = shifted.poly().coeff(j);
        rows.push_back(std::move(r));
    }
    return LinearCode(c.field, c.m, std::move(rows));
}

namespace {

// Packed q=2 rows: one row of m <= 64*W bits per generator row x^i * f.
struct PackedScan {
    int min_weight;
    std::vector<uint64_t> messages;  // Gray codes (= multiplier masks) attaining min_weight, ascending index
};

// Walks messages gray(i) for i in [from, to), maintaining the codeword with
// one row-XOR per step. Collects every message attaining the running
// minimum.
template <typename WordsAt>
PackedScan scan_binary_range(const std::vector<std::vector<uint64_t>>& rows, uint64_t from, uint64_t to,
                             WordsAt&& weight_of) {
    size_t nw = rows.empty() ? 0 : rows[0].size();
    std::vector<uint64_t> cw(nw, 0);
    uint64_t g = from ^ (from >> 1);  // Gray code of the range start
    for (size_t r = 0; r < rows.size(); ++r) {
        if (g & (uint64_t{1} << r)) {
            for (size_t w = 0; w < nw; ++w) cw[w] ^= rows[r][w];
        }
    }
    PackedScan out{INT32_MAX, {}};
    for (uint64_t i = from; i < to; ++i) {
        if (i != from) {
            int flip = std::countr_zero(i);
            for (size_t w = 0; w < nw; ++w) cw[w] ^= rows[static_cast<size_t>(flip)][w];
        }
        int wt = weight_of(cw);
        if (wt < out.min_weight) {
            out.min_weight = wt;
            out.messages.clear();
            out.messages.push_back(i ^ (i >> 1));
        } else if (wt == out.min_weight) {
            out.messages.push_back(i ^ (i >> 1));
        }
    }
    return out;
}

Poly poly_from_mask(uint64_t mask) {
    std::vector<uint32_t> c;
    while (mask != 0) {
        c.push_back(static_cast<uint32_t>(mask & 1));
        mask >>= 1;
    }
    return Poly(std::move(c));
}

MinWeightResult min_weight_binary(const CyclicCode& c, int workers) {
    // rows: coefficient vectors of x^i * f, bit-packed
    size_t nwords = static_cast<size_t>((c.m + 63) / 64);
    std::vector<std::vector<uint64_t>> rows(static_cast<size_t>(c.k), std::vector<uint64_t>(nwords, 0));
    RingElement base(c.f, c.m, c.field);
    for (int i = 0; i < c.k; ++i) {
        RingElement sh = ring_shift(base, i);
        for (int j = 0; j <= sh.poly().degree(); ++j) {
            if (sh.poly().coeff(j)) rows[static_cast<size_t>(i)][static_cast<size_t>(j) / 64] |= uint64_t{1} << (j % 64);
        }
    }
    auto weight_of = [](const std::vector<uint64_t>& cw) {
        int w = 0;
        for (uint64_t x : cw) w += std::popcount(x);
        return w;
    };

    uint64_t total = (uint64_t{1} << c.k);
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    uint64_t span = total - 1;
    if (span < 4096 || workers == 1) {
        PackedScan s = scan_binary_range(rows, 1, total, weight_of);
        MinWeightResult res{s.min_weight, {}};
        for (uint64_t msg : s.messages) res.words.push_back(poly_from_mask(msg));
        return res;
    }

    std::vector<PackedScan> parts(static_cast<size_t>(workers));
    std::vector<std::thread> threads;
    uint64_t chunk = span / static_cast<uint64_t>(workers);
    for (int t = 0; t < workers; ++t) {
        uint64_t from = 1 + chunk * static_cast<uint64_t>(t);
        uint64_t to = (t == workers - 1) ? total : from + chunk;
        threads.emplace_back([&, t, from, to] { parts[static_cast<size_t>(t)] = scan_binary_range(rows, from, to, weight_of); });
    }
    for (std::thread& th : threads) th.join();

    int best = INT32_MAX;
    for (const PackedScan& p : parts) best = std::min(best, p.min_weight);
    MinWeightResult res{best, {}};
    for (const PackedScan& p : parts) {
        if (p.min_weight != best) continue;
        for (uint64_t msg : p.messages) res.words.push_back(poly_from_mask(msg));
    }
    return res;
}

MinWeightResult min_weight_generic(const CyclicCode& c) {
    // direct odometer over all q^k - 1 nonzero multipliers
    const FieldSpec& F = c.field;
    RingElement base(c.f, c.m, c.field);
    std::vector<RingElement> rows;
    for (int i = 0; i < c.k; ++i) rows.push_back(ring_shift(base, i));

    std::vector<uint32_t> digits(static_cast<size_t>(c.k), 0);
    Row cw(static_cast<size_t>(c.m), 0);
    MinWeightResult res{INT32_MAX, {}};
    while (true) {
        // increment odometer, updating cw incrementally: rolling a digit
        // from q-1 to 0 adds the row once more (since -(q-1) == 1 mod q)
        size_t pos = 0;
        while (pos < digits.size() && digits[pos] == F.q() - 1) {
            digits[pos] = 0;
            const Poly& rp = rows[pos].poly();
            for (int j = 0; j <= rp.degree(); ++j) {
                cw[static_cast<size_t>(j)] = F.add(cw[static_cast<size_t>(j)], rp.coeff(j));
            }
            ++pos;
        }
        if (pos == digits.size()) break;
        digits[pos] += 1;
        const Poly& rp = rows[pos].poly();
        for (int j = 0; j <= rp.degree(); ++j) {
            cw[static_cast<size_t>(j)] = F.add(cw[static_cast<size_t>(j)], rp.coeff(j));
        }

        int wt = 0;
        for (uint32_t v : cw) wt += (v != 0);
        if (wt < res.d) {
            res.d = wt;
            res.words.clear();
        }
        if (wt == res.d) {
            std::vector<uint32_t> h(digits.begin(), digits.end());
            res.words.emplace_back(std::move(h));
        }
    }
    return res;
}

}  // namespace

MinWeightResult min_weight_words(const CyclicCode& c, int enum_cap, int workers) {
    if (c.k > enum_cap || c.k > 62) {
        throw CapExceeded("dimension k=" + std::to_string(c.k) + " above enumeration cap " +
                          std::to_string(std::min(enum_cap, 62)));
    }
    if (c.k < 1) throw EmptyCode("cyclic code has no nonzero codeword");

    MinWeightResult res = (c.field.q() == 2) ? min_weight_binary(c, workers) : min_weight_generic(c);
    std::sort(res.words.begin(), res.words.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return res;
}

CyclicCode with_min_weight(const CyclicCode& c, int enum_cap, int workers) {
    if (c.min_weight.has_value()) return c;
    MinWeightResult r = min_weight_words(c, enum_cap, workers);
    CyclicCode out = c;
    out.min_weight = r.d;
    out.min_words = std::move(r.words);
    return out;
}

bool is_nested(const CyclicCode& a, const CyclicCode& b) {
    if (a.m != b.m || !(a.field == b.field)) {
        throw DimensionMismatch("nesting test requires equal length and field");
    }
    return poly_divides(a.f, b.f, a.field);
}

}  // namespace qcmp
