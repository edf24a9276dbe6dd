#include "qcmp/codeops.hpp"

namespace qcmp {

namespace {

void check_pos(const LinearCode& code, int pos) {
    if (pos < 1 || pos > code.n()) {
        throw DimensionMismatch("position " + std::to_string(pos) + " outside 1.." + std::to_string(code.n()));
    }
}

Row drop_column(const Row& r, size_t col) {
    Row out;
    out.reserve(r.size() - 1);
    for (size_t i = 0; i < r.size(); ++i) {
        if (i != col) out.push_back(r[i]);
    }
    return out;
}

}  // namespace

LinearCode puncture(const LinearCode& code, int pos) {
    check_pos(code, pos);
    size_t col = static_cast<size_t>(pos - 1);
    Matrix rows;
    rows.reserve(code.rows().size());
    for (const Row& r : code.rows()) rows.push_back(drop_column(r, col));
    return LinearCode(code.field(), code.n() - 1, std::move(rows));
}

LinearCode shorten(const LinearCode& code, int pos) {
    check_pos(code, pos);
    const FieldSpec& F = code.field();
    size_t col = static_cast<size_t>(pos - 1);
    Matrix rows = code.rows();
    // clear column col from all but one pivot row, then discard the pivot
    size_t pivot = rows.size();
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][col] != 0) {
            pivot = r;
            break;
        }
    }
    if (pivot != rows.size()) {
        uint32_t inv = F.inv(rows[pivot][col]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot || rows[r][col] == 0) continue;
            uint32_t factor = F.mul(rows[r][col], inv);
            for (size_t c = 0; c < rows[r].size(); ++c) {
                rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[pivot][c]));
            }
        }
        rows.erase(rows.begin() + static_cast<ptrdiff_t>(pivot));
    }
    Matrix out;
    out.reserve(rows.size());
    for (const Row& r : rows) out.push_back(drop_column(r, col));
    return LinearCode(F, code.n() - 1, std::move(out));
}

LinearCode extend(const LinearCode& code) {
    if (code.field().q() != 2) {
        throw Unsupported("extend is defined for q = 2");
    }
    Matrix rows = code.rows();
    for (Row& r : rows) {
        uint32_t parity = 0;
        for (uint32_t v : r) parity ^= v;
        r.push_back(parity);
    }
    return LinearCode(code.field(), code.n() + 1, std::move(rows));
}

bool same_code(const LinearCode& a, const LinearCode& b) {
    if (!(a.field() == b.field()) || a.n() != b.n()) {
        throw DimensionMismatch("row-space comparison requires equal field and length");
    }
    RrefResult ra = rank_and_reduce(a.rows(), a.n(), a.field());
    RrefResult rb = rank_and_reduce(b.rows(), b.n(), b.field());
    return ra.rank == rb.rank && ra.rref == rb.rref;
}

}  // namespace qcmp
