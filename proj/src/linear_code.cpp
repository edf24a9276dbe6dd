#include "qcmp/linear_code.hpp"

#include <fstream>
#include <sstream>

namespace qcmp {

RrefResult rank_and_reduce(const Matrix& rows, int n, const FieldSpec& F) {
    RrefResult res;
    res.rref = rows;
    for (Row& r : res.rref) {
        if (static_cast<int>(r.size()) != n) {
            throw DimensionMismatch("row length " + std::to_string(r.size()) + " != n=" + std::to_string(n));
        }
    }
    size_t pivot_row = 0;
    for (int col = 0; col < n && pivot_row < res.rref.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < res.rref.size() && res.rref[sel][static_cast<size_t>(col)] == 0) ++sel;
        if (sel == res.rref.size()) continue;
        std::swap(res.rref[pivot_row], res.rref[sel]);
        Row& p = res.rref[pivot_row];
        uint32_t inv = F.inv(p[static_cast<size_t>(col)]);
        if (inv != 1) {
            for (uint32_t& v : p) v = F.mul(v, inv);
        }
        for (size_t r = 0; r < res.rref.size(); ++r) {
            if (r == pivot_row) continue;
            uint32_t factor = res.rref[r][static_cast<size_t>(col)];
            if (factor == 0) continue;
            for (int c = 0; c < n; ++c) {
                res.rref[r][static_cast<size_t>(c)] =
                    F.sub(res.rref[r][static_cast<size_t>(c)], F.mul(factor, p[static_cast<size_t>(c)]));
            }
        }
        res.pivots.push_back(col);
        ++pivot_row;
    }
    res.rank = static_cast<int>(pivot_row);
    res.rref.resize(pivot_row);
    return res;
}

Row rref_residue(const RrefResult& basis, Row v, const FieldSpec& F) {
    for (size_t i = 0; i < basis.rref.size(); ++i) {
        size_t col = static_cast<size_t>(basis.pivots[i]);
        uint32_t factor = v[col];
        if (factor == 0) continue;
        for (size_t c = 0; c < v.size(); ++c) {
            v[c] = F.sub(v[c], F.mul(factor, basis.rref[i][c]));
        }
    }
    return v;
}

bool in_row_space(const RrefResult& basis, const Row& v, const FieldSpec& F) {
    Row r = rref_residue(basis, v, F);
    for (uint32_t x : r) {
        if (x != 0) return false;
    }
    return true;
}

LinearCode::LinearCode(const FieldSpec& F, int n, Matrix rows)
    : field_(F), n_(n), rows_(std::move(rows)) {
    if (n < 1) throw DimensionMismatch("code length must be positive");
    for (const Row& r : rows_) {
        if (static_cast<int>(r.size()) != n) {
            throw DimensionMismatch("generator row length != n");
        }
        for (uint32_t v : r) {
            if (v >= F.q()) throw DimensionMismatch("symbol out of field range");
        }
    }
    rank_ = rank_and_reduce(rows_, n_, field_).rank;
}

void write_generator_matrix(std::ostream& out, const LinearCode& code) {
    out << code.field().q() << ' ' << code.n() << ' ' << code.rows().size() << '\n';
    for (const Row& r : code.rows()) {
        for (uint32_t v : r) {
            if (v > 9) throw Unsupported("generator-matrix files carry single-digit symbols only");
            out << static_cast<char>('0' + v);
        }
        out << '\n';
    }
}

void write_generator_matrix_file(const std::string& path, const LinearCode& code) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_generator_matrix(out, code);
}

LinearCode read_generator_matrix(std::istream& in) {
    uint32_t q = 0;
    int n = 0, k = 0;
    std::string header;
    if (!std::getline(in, header)) throw ParseError("generator-matrix file: missing header");
    {
        std::istringstream hs(header);
        if (!(hs >> q >> n >> k) || n < 1 || k < 0) {
            throw ParseError("generator-matrix file: malformed header '" + header + "'");
        }
    }
    FieldSpec F(q);
    Matrix rows;
    rows.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::string line;
        if (!std::getline(in, line)) throw ParseError("generator-matrix file: expected " + std::to_string(k) +
                                                      " rows, got " + std::to_string(i));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<int>(line.size()) != n) {
            throw ParseError("generator-matrix file: row " + std::to_string(i + 1) + " has " +
                             std::to_string(line.size()) + " symbols, expected " + std::to_string(n));
        }
        Row r(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) {
            char ch = line[static_cast<size_t>(c)];
            if (ch < '0' || ch > '9') throw ParseError("generator-matrix file: non-digit symbol in row");
            r[static_cast<size_t>(c)] = static_cast<uint32_t>(ch - '0');
        }
        rows.push_back(std::move(r));
    }
    return LinearCode(F, n, std::move(rows));
}

LinearCode read_generator_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_generator_matrix(in);
}

}  // namespace qcmp
