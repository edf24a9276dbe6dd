#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcmp/field.hpp"

namespace qcmp {

using Row = std::vector<uint32_t>;
using Matrix = std::vector<Row>;

struct RrefResult {
    int rank = 0;
    Matrix rref;              // reduced row-echelon form, zero rows dropped
    std::vector<int> pivots;  // pivot column per rref row, ascending
};

// Gaussian elimination over F_q with deterministic leftmost pivot choice.
RrefResult rank_and_reduce(const Matrix& rows, int n, const FieldSpec& F);

// Reduce v against an RREF basis; returns the residue (zero iff v lies in
// the row space).
Row rref_residue(const RrefResult& basis, Row v, const FieldSpec& F);
bool in_row_space(const RrefResult& basis, const Row& v, const FieldSpec& F);

// Linear code presented by a generator matrix over F_q. Rows are kept
// exactly as given; dimension() is their F_q-rank, computed on
// construction (for every code this library builds the rows are
// independent and dimension() equals the row count).
class LinearCode {
  public:
    LinearCode(const FieldSpec& F, int n, Matrix rows);

    const FieldSpec& field() const noexcept { return field_; }
    int n() const noexcept { return n_; }
    int dimension() const noexcept { return rank_; }
    const Matrix& rows() const noexcept { return rows_; }

  private:
    FieldSpec field_;
    int n_;
    Matrix rows_;
    int rank_;
};

// Generator-matrix file: header `q n k`, then k lines of n digit symbols.
void write_generator_matrix(std::ostream& out, const LinearCode& code);
void write_generator_matrix_file(const std::string& path, const LinearCode& code);
LinearCode read_generator_matrix(std::istream& in);
LinearCode read_generator_matrix_file(const std::string& path);

}  // namespace qcmp
