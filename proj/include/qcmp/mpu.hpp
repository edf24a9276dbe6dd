#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcmp/cyclic.hpp"

namespace qcmp {

// Budget for the brute-force row-module weight search (regime with general
// polynomial entries), counted in ring-coefficient tuples q^(i*m).
inline constexpr uint64_t kDefaultModuleCap = uint64_t{1} << 24;

// s x l matrix over F_q[x]/(x^m - 1), s <= l. Entries need not be units;
// unit-ness only matters to the rank certificate and the canonical shapes.
class UnitMatrix {
  public:
    UnitMatrix(int s, int l, std::vector<RingElement> row_major_entries);

    int s() const noexcept { return s_; }
    int l() const noexcept { return l_; }
    int m() const noexcept { return entries_.front().m(); }
    const FieldSpec& field() const noexcept { return entries_.front().field(); }
    const RingElement& at(int i, int j) const { return entries_[static_cast<size_t>(i * l_ + j)]; }

    // the i-th row R_i
    std::vector<RingElement> row(int i) const;

    bool all_constant() const;

  private:
    int s_;
    int l_;
    std::vector<RingElement> entries_;
};

// ((g1, g2), (0, g4)) with all three entries units; the shape used by the
// polynomial-unit Plotkin construction.
bool is_canonical_2x2(const UnitMatrix& A);
UnitMatrix canonical_2x2(const RingElement& g1, const RingElement& g2, const RingElement& g4);
// ((1, g), (0, 1))
UnitMatrix canonical_2x2(const RingElement& g);

enum class RankCertificate { Holds, Unknown };
const char* to_string(RankCertificate c);

// `Holds` when some s x s minor of A has a unit determinant in the ring (a
// sufficient condition for the construction to reach dimension sum k_i);
// `Unknown` otherwise.
RankCertificate full_rank_certificate(const UnitMatrix& A);

// The matrix-product code with polynomial units C = [C_1 ... C_s] A.
struct MPCode {
    std::vector<CyclicCode> constituents;
    UnitMatrix matrix;
    LinearCode code;  // the assembled block generator matrix, length l*m
    RankCertificate certificate;
};

// Assembles the (sum k_i) x (l*m) generator matrix whose block row i holds
// the cyclic shifts x^t (a_{i,j} f_i), t = 0..k_i-1, across the l column
// blocks. If the rank certificate holds but the F_q-rank of the result is
// below sum k_i, errors with RankDefect.
MPCode build_mp(const std::vector<CyclicCode>& codes, const UnitMatrix& A);

// Codeword of the messages h_i: block j is sum_i a_{i,j} (f_i h_i).
Row encode(const std::vector<Poly>& messages, const UnitMatrix& A, const std::vector<CyclicCode>& codes);

// D_i: minimum number of nonzero ring coordinates over the nonzero elements
// of the submodule generated by rows R_1..R_i. Supported regimes:
//   - constant-entry matrices: brute force over the q^i scalar combinations;
//   - the canonical 2x2 shape: D_1 = 2, D_2 = 1;
//   - general polynomial entries: brute force over all q^(i*m) coefficient
//     tuples while q^(i*m) <= cap.
// Everything else errors with Unsupported. row_index is 1-based.
int row_module_min_blockweight(const UnitMatrix& A, int row_index, uint64_t cap = kDefaultModuleCap);

// The distance lower bound d* = min_i d_i D_i. Constituent distances come
// from the exhaustive cyclic enumeration (computed here when not cached).
int dstar(const std::vector<CyclicCode>& codes, const UnitMatrix& A, int enum_cap = kDefaultEnumCap,
          uint64_t module_cap = kDefaultModuleCap);

struct CandidateWords {
    Matrix words;  // genuine codewords of the three candidate families
    int upper;     // least weight among them; d(C) <= upper
};

// For the canonical 2x2 shape with nested constituents (f1 | f2), emits the
// three candidate minimum-weight families
//   (f1 h1 g1, f1 h1 g2), (0, f2 h2 g4), (f2 h2 g1 g4, 0)
// instantiated over every cached minimum-weight multiplier h1, h2.
CandidateWords candidate_low_weight_words(const std::vector<CyclicCode>& codes, const UnitMatrix& A);

struct NormalizedPlotkin {
    UnitMatrix matrix;          // ((1, g), (0, 1)) with g = g2 * g4^-1
    RingElement block1_scale;   // g1^-1
    RingElement block2_scale;   // g4^-1
};

// Blockwise unit equivalence (v1, v2) -> (v1 g1^-1, v2 g4^-1) carrying
// code(A) onto code(((1, g), (0, 1))).
NormalizedPlotkin normalize_plotkin(const UnitMatrix& A);

// ---------------------------------------------------------------------------
// Code-spec file: line-oriented `key=value` with keys q, m, f1..fs, A, g.
// Entries of A are polynomial text, `0`, or the name `g`; f-values accept
// the exact-quotient form `(x^M-1)/(D)`.
// ---------------------------------------------------------------------------
struct CodeSpec {
    FieldSpec field;
    int m;
    std::vector<Poly> constituent_generators;
    UnitMatrix matrix;
};

CodeSpec parse_code_spec(std::istream& in);
CodeSpec parse_code_spec_text(const std::string& text);
CodeSpec read_code_spec_file(const std::string& path);

MPCode build_from_spec(const CodeSpec& spec);

}  // namespace qcmp
