#include "qcmp/mpu.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace qcmp {

UnitMatrix::UnitMatrix(int s, int l, std::vector<RingElement> row_major_entries)
    : s_(s), l_(l), entries_(std::move(row_major_entries)) {
    if (s < 1 || l < s) throw DimensionMismatch("matrix shape must satisfy 1 <= s <= l");
    if (entries_.size() != static_cast<size_t>(s) * static_cast<size_t>(l)) {
        throw DimensionMismatch("entry count does not match s*l");
    }
    for (const RingElement& e : entries_) {
        if (e.m() != entries_.front().m() || !(e.field() == entries_.front().field())) {
            throw DimensionMismatch("matrix entries live in different rings");
        }
    }
}

std::vector<RingElement> UnitMatrix::row(int i) const {
    std::vector<RingElement> r;
    r.reserve(static_cast<size_t>(l_));
    for (int j = 0; j < l_; ++j) r.push_back(at(i, j));
    return r;
}

bool UnitMatrix::all_constant() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const RingElement& e) { return e.is_constant(); });
}

bool is_canonical_2x2(const UnitMatrix& A) {
    if (A.s() != 2 || A.l() != 2) return false;
    if (!A.at(1, 0).is_zero()) return false;
    return is_unit(A.at(0, 0)) && is_unit(A.at(0, 1)) && is_unit(A.at(1, 1));
}

UnitMatrix canonical_2x2(const RingElement& g1, const RingElement& g2, const RingElement& g4) {
    RingElement zero = ring_zero(g1.m(), g1.field());
    return UnitMatrix(2, 2, {g1, g2, zero, g4});
}

UnitMatrix canonical_2x2(const RingElement& g) {
    RingElement one = ring_one(g.m(), g.field());
    return canonical_2x2(one, g, one);
}

const char* to_string(RankCertificate c) { return c == RankCertificate::Holds ? "holds" : "unknown"; }

namespace {

// Determinant of the square submatrix A[0..s) x cols, by cofactor expansion.
RingElement minor_determinant(const UnitMatrix& A, const std::vector<int>& cols) {
    size_t n = cols.size();
    if (n == 1) return A.at(0, cols[0]);
    // expand recursively along row (n-1 deep) using an index list
    struct Rec {
        const UnitMatrix& A;
        RingElement run(int row, std::vector<int> cols) {
            if (cols.size() == 1) return A.at(row, cols[0]);
            RingElement acc = ring_zero(A.m(), A.field());
            for (size_t j = 0; j < cols.size(); ++j) {
                const RingElement& pivot = A.at(row, cols[j]);
                if (pivot.is_zero()) continue;
                std::vector<int> rest;
                rest.reserve(cols.size() - 1);
                for (size_t t = 0; t < cols.size(); ++t) {
                    if (t != j) rest.push_back(cols[t]);
                }
                RingElement term = ring_mul(pivot, run(row + 1, std::move(rest)));
                acc = (j % 2 == 0) ? ring_add(acc, term) : ring_sub(acc, term);
            }
            return acc;
        }
    };
    return Rec{A}.run(0, cols);
}

}  // namespace

RankCertificate full_rank_certificate(const UnitMatrix& A) {
    // search all s-column subsets for a unit minor
    std::vector<int> cols(static_cast<size_t>(A.s()));
    for (int i = 0; i < A.s(); ++i) cols[static_cast<size_t>(i)] = i;
    while (true) {
        if (is_unit(minor_determinant(A, cols))) return RankCertificate::Holds;
        // next combination
        int i = A.s() - 1;
        while (i >= 0 && cols[static_cast<size_t>(i)] == A.l() - A.s() + i) --i;
        if (i < 0) break;
        ++cols[static_cast<size_t>(i)];
        for (int j = i + 1; j < A.s(); ++j) cols[static_cast<size_t>(j)] = cols[static_cast<size_t>(j - 1)] + 1;
    }
    return RankCertificate::Unknown;
}

namespace {

void check_codes_match(const std::vector<CyclicCode>& codes, const UnitMatrix& A) {
    if (static_cast<int>(codes.size()) != A.s()) {
        throw DimensionMismatch("constituent count " + std::to_string(codes.size()) + " != s = " +
                                std::to_string(A.s()));
    }
    for (const CyclicCode& c : codes) {
        if (c.m != A.m() || !(c.field == A.field())) {
            throw DimensionMismatch("constituent code and matrix live in different rings");
        }
    }
}

}  // namespace

MPCode build_mp(const std::vector<CyclicCode>& codes, const UnitMatrix& A) {
    check_codes_match(codes, A);
    int m = A.m();
    int n = A.l() * m;
    int expected_k = 0;
    for (const CyclicCode& c : codes) expected_k += c.k;

    Matrix rows;
    rows.reserve(static_cast<size_t>(expected_k));
    for (int i = 0; i < A.s(); ++i) {
        // block row i: shifts of (a_{i,j} f_i) laid across the l blocks
        std::vector<RingElement> base;
        base.reserve(static_cast<size_t>(A.l()));
        RingElement fi(codes[static_cast<size_t>(i)].f, m, A.field());
        for (int j = 0; j < A.l(); ++j) base.push_back(ring_mul(A.at(i, j), fi));
        for (int t = 0; t < codes[static_cast<size_t>(i)].k; ++t) {
            Row row(static_cast<size_t>(n), 0);
            for (int j = 0; j < A.l(); ++j) {
                RingElement sh = ring_shift(base[static_cast<size_t>(j)], t);
                for (int c = 0; c <= sh.poly().degree(); ++c) {
                    row[static_cast<size_t>(j * m + c)] = sh.poly().coeff(c);
                }
            }
            rows.push_back(std::move(row));
        }
    }

    LinearCode code(A.field(), n, std::move(rows));
    RankCertificate cert = full_rank_certificate(A);
    if (cert == RankCertificate::Holds && code.dimension() != expected_k) {
        throw RankDefect("certificate holds but rank " + std::to_string(code.dimension()) +
                         " != k1+...+ks = " + std::to_string(expected_k));
    }
    return MPCode{codes, A, std::move(code), cert};
}

Row encode(const std::vector<Poly>& messages, const UnitMatrix& A, const std::vector<CyclicCode>& codes) {
    check_codes_match(codes, A);
    if (messages.size() != codes.size()) throw DimensionMismatch("message count != constituent count");
    int m = A.m();
    for (size_t i = 0; i < messages.size(); ++i) {
        if (messages[i].degree() >= codes[i].k) {
            throw DimensionMismatch("message " + std::to_string(i + 1) + " has degree " +
                                    std::to_string(messages[i].degree()) + ", limit is k-1 = " +
                                    std::to_string(codes[i].k - 1));
        }
    }
    Row out(static_cast<size_t>(A.l() * m), 0);
    for (int j = 0; j < A.l(); ++j) {
        RingElement block = ring_zero(m, A.field());
        for (int i = 0; i < A.s(); ++i) {
            RingElement ci(poly_mul(messages[static_cast<size_t>(i)], codes[static_cast<size_t>(i)].f, A.field()), m,
                           A.field());
            block = ring_add(block, ring_mul(A.at(i, j), ci));
        }
        for (int c = 0; c <= block.poly().degree(); ++c) {
            out[static_cast<size_t>(j * m + c)] = block.poly().coeff(c);
        }
    }
    return out;
}

namespace {

int blockweight(const std::vector<RingElement>& v) {
    int w = 0;
    for (const RingElement& e : v) w += !e.is_zero();
    return w;
}

uint64_t checked_pow_u64(uint64_t base, int exp, uint64_t limit) {
    uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > limit / base) return limit + 1;
        v *= base;
    }
    return v;
}

int min_blockweight_constant(const UnitMatrix& A, int rows, uint64_t cap) {
    const FieldSpec& F = A.field();
    uint64_t total = checked_pow_u64(F.q(), rows, cap);
    if (total > cap) throw Unsupported("q^i exceeds the search budget");
    int best = INT32_MAX;
    for (uint64_t idx = 1; idx < total; ++idx) {
        uint64_t v = idx;
        std::vector<uint32_t> lambda(static_cast<size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            lambda[static_cast<size_t>(i)] = static_cast<uint32_t>(v % F.q());
            v /= F.q();
        }
        int w = 0;
        bool nonzero = false;
        for (int j = 0; j < A.l(); ++j) {
            uint32_t sum = 0;
            for (int i = 0; i < rows; ++i) {
                sum = F.add(sum, F.mul(lambda[static_cast<size_t>(i)], A.at(i, j).poly().coeff(0)));
            }
            if (sum != 0) {
                ++w;
                nonzero = true;
            }
        }
        if (nonzero) best = std::min(best, w);
    }
    if (best == INT32_MAX) throw Unsupported("row module contains only the zero word");
    return best;
}

int min_blockweight_bruteforce(const UnitMatrix& A, int rows, uint64_t cap) {
    const FieldSpec& F = A.field();
    int m = A.m();
    uint64_t total = checked_pow_u64(F.q(), rows * m, cap);
    if (total > cap) {
        throw Unsupported("q^(i*m) = q^" + std::to_string(rows * m) + " exceeds the search budget " +
                          std::to_string(cap));
    }
    int best = INT32_MAX;
    std::vector<uint32_t> digits(static_cast<size_t>(rows * m), 0);
    for (uint64_t idx = 1; idx < total; ++idx) {
        // odometer over the coefficient tuples of (r_1, ..., r_i)
        size_t pos = 0;
        while (digits[pos] == F.q() - 1) {
            digits[pos] = 0;
            ++pos;
        }
        digits[pos] += 1;

        std::vector<RingElement> v;
        v.reserve(static_cast<size_t>(A.l()));
        for (int j = 0; j < A.l(); ++j) v.push_back(ring_zero(m, F));
        for (int i = 0; i < rows; ++i) {
            std::vector<uint32_t> coeffs(digits.begin() + i * m, digits.begin() + (i + 1) * m);
            Poly ri(std::move(coeffs));
            if (ri.is_zero()) continue;
            RingElement r(ri, m, F);
            for (int j = 0; j < A.l(); ++j) {
                v[static_cast<size_t>(j)] = ring_add(v[static_cast<size_t>(j)], ring_mul(r, A.at(i, j)));
            }
        }
        int w = blockweight(v);
        if (w > 0) best = std::min(best, w);
    }
    if (best == INT32_MAX) throw Unsupported("row module contains only the zero word");
    return best;
}

}  // namespace

int row_module_min_blockweight(const UnitMatrix& A, int row_index, uint64_t cap) {
    if (row_index < 1 || row_index > A.s()) {
        throw DimensionMismatch("row index " + std::to_string(row_index) + " outside 1.." + std::to_string(A.s()));
    }
    if (is_canonical_2x2(A)) return row_index == 1 ? 2 : 1;
    if (A.all_constant()) return min_blockweight_constant(A, row_index, cap);
    return min_blockweight_bruteforce(A, row_index, cap);
}

int dstar(const std::vector<CyclicCode>& codes, const UnitMatrix& A, int enum_cap, uint64_t module_cap) {
    check_codes_match(codes, A);
    int bound = INT32_MAX;
    for (int i = 0; i < A.s(); ++i) {
        const CyclicCode& c = codes[static_cast<size_t>(i)];
        int di = c.min_weight ? *c.min_weight : min_weight_words(c, enum_cap).d;
        int Di = row_module_min_blockweight(A, i + 1, module_cap);
        bound = std::min(bound, di * Di);
    }
    return bound;
}

CandidateWords candidate_low_weight_words(const std::vector<CyclicCode>& codes, const UnitMatrix& A) {
    check_codes_match(codes, A);
    if (!is_canonical_2x2(A)) {
        throw Unsupported("candidate families are defined for the canonical 2x2 shape");
    }
    const CyclicCode& c1 = codes[0];
    const CyclicCode& c2 = codes[1];
    if (!is_nested(c1, c2)) {
        throw DimensionMismatch("constituents must be nested (f1 | f2)");
    }
    if (!c1.min_weight || !c2.min_weight || c1.min_words.empty() || c2.min_words.empty()) {
        throw MissingWordCache("minimum-weight word lists must be cached on both constituents");
    }

    int m = A.m();
    const FieldSpec& F = A.field();
    const RingElement& g1 = A.at(0, 0);
    const RingElement& g2 = A.at(0, 1);
    const RingElement& g4 = A.at(1, 1);
    RingElement g1g4 = ring_mul(g1, g4);

    CandidateWords out{{}, INT32_MAX};
    auto push_word = [&](const RingElement& b1, const RingElement& b2) {
        Row w(static_cast<size_t>(2 * m), 0);
        for (int c = 0; c <= b1.poly().degree(); ++c) w[static_cast<size_t>(c)] = b1.poly().coeff(c);
        for (int c = 0; c <= b2.poly().degree(); ++c) w[static_cast<size_t>(m + c)] = b2.poly().coeff(c);
        int wt = poly_weight(b1.poly()) + poly_weight(b2.poly());
        out.upper = std::min(out.upper, wt);
        out.words.push_back(std::move(w));
    };

    RingElement zero = ring_zero(m, F);
    for (const Poly& h1 : c1.min_words) {
        RingElement c(poly_mul(h1, c1.f, F), m, F);
        push_word(ring_mul(c, g1), ring_mul(c, g2));
    }
    for (const Poly& h2 : c2.min_words) {
        RingElement c(poly_mul(h2, c2.f, F), m, F);
        push_word(zero, ring_mul(c, g4));
        push_word(ring_mul(c, g1g4), zero);
    }
    return out;
}

NormalizedPlotkin normalize_plotkin(const UnitMatrix& A) {
    if (A.s() != 2 || A.l() != 2 || !A.at(1, 0).is_zero()) {
        throw Unsupported("normalization expects the shape ((g1, g2), (0, g4))");
    }
    const RingElement& g1 = A.at(0, 0);
    const RingElement& g2 = A.at(0, 1);
    const RingElement& g4 = A.at(1, 1);
    RingElement g1_inv = ring_inverse(g1);  // NotAUnit when not invertible
    RingElement g4_inv = ring_inverse(g4);
    RingElement g = ring_mul(g2, g4_inv);
    return NormalizedPlotkin{canonical_2x2(g), g1_inv, g4_inv};
}

// ---------------------------------------------------------------------------
// Code-spec files
// ---------------------------------------------------------------------------

namespace {

// Accepts plain polynomial text or the exact-quotient form `(x^M-1)/(D)`.
Poly parse_poly_or_quotient(const std::string& value, const FieldSpec& F) {
    std::string s;
    for (char c : value) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    size_t split = s.find(")/(");
    if (!s.empty() && s.front() == '(' && split != std::string::npos && s.back() == ')') {
        Poly numer = parse_poly(s.substr(1, split - 1), F);
        Poly denom = parse_poly(s.substr(split + 3, s.size() - split - 4), F);
        PolyDivMod dm = poly_divmod(numer, denom, F);
        if (!dm.remainder.is_zero()) {
            throw ParseError("quotient '" + value + "' does not divide exactly");
        }
        return dm.quotient;
    }
    return parse_poly(s, F);
}

}  // namespace

CodeSpec parse_code_spec(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
        }
        if (trimmed.empty() || trimmed[0] == '#') continue;
        size_t eq = trimmed.find('=');
        if (eq == std::string::npos) {
            throw ParseError("code-spec line " + std::to_string(line_no) + ": expected key=value");
        }
        kv[trimmed.substr(0, eq)] = trimmed.substr(eq + 1);
    }
    auto require = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParseError("code-spec: missing key '" + key + "'");
        return it->second;
    };

    FieldSpec F(static_cast<uint32_t>(std::stoul(require("q"))));
    int m = std::stoi(require("m"));
    if (m < 1) throw ParseError("code-spec: m must be positive");

    std::vector<Poly> generators;
    for (int i = 1;; ++i) {
        auto it = kv.find("f" + std::to_string(i));
        if (it == kv.end()) break;
        generators.push_back(parse_poly_or_quotient(it->second, F));
    }
    if (generators.empty()) throw ParseError("code-spec: no constituent generators f1, f2, ...");

    // A=[[e,e,...],[...]] with entries: poly text, 0, or the name g
    const std::string& a_text = require("A");
    if (a_text.size() < 4 || a_text.substr(0, 2) != "[[" || a_text.substr(a_text.size() - 2) != "]]") {
        throw ParseError("code-spec: A must look like [[...],[...]]");
    }
    std::vector<std::vector<std::string>> entries;
    std::string body = a_text.substr(2, a_text.size() - 4);
    size_t pos = 0;
    while (true) {
        size_t end = body.find("],[", pos);
        std::string row_text = body.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        std::vector<std::string> row;
        size_t p = 0;
        while (true) {
            size_t comma = row_text.find(',', p);
            row.push_back(row_text.substr(p, comma == std::string::npos ? std::string::npos : comma - p));
            if (comma == std::string::npos) break;
            p = comma + 1;
        }
        entries.push_back(std::move(row));
        if (end == std::string::npos) break;
        pos = end + 3;
    }

    int s = static_cast<int>(entries.size());
    int l = static_cast<int>(entries.front().size());
    std::vector<RingElement> ring_entries;
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != l) throw ParseError("code-spec: ragged matrix A");
        for (const std::string& cell : row) {
            Poly p;
            if (cell == "g") {
                p = parse_poly_or_quotient(require("g"), F);
            } else {
                p = parse_poly_or_quotient(cell, F);
            }
            ring_entries.emplace_back(p, m, F);
        }
    }
    return CodeSpec{F, m, std::move(generators), UnitMatrix(s, l, std::move(ring_entries))};
}

CodeSpec parse_code_spec_text(const std::string& text) {
    std::istringstream in(text);
    return parse_code_spec(in);
}

CodeSpec read_code_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_code_spec(in);
}

MPCode build_from_spec(const CodeSpec& spec) {
    std::vector<CyclicCode> codes;
    codes.reserve(spec.constituent_generators.size());
    for (const Poly& f : spec.constituent_generators) {
        codes.push_back(make_cyclic(f, spec.m, spec.field));
    }
    return build_mp(codes, spec.matrix);
}

}  // namespace qcmp
