#include "doctest.h"

#include <fstream>
#include <sstream>

#include "qcmp/record_codes.hpp"
#include "qcmp/search.hpp"

using namespace qcmp;

#ifndef QCMP_DATA_DIR
#define QCMP_DATA_DIR "data"
#endif

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(bool(in), "missing data file ", path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("bundled spec files match the embedded transcription byte for byte") {
    for (const RecordCode& rc : record_codes()) {
        CHECK(slurp(std::string(QCMP_DATA_DIR) + "/" + rc.name + ".codespec") == rc.spec_text);
    }
    CHECK(slurp(std::string(QCMP_DATA_DIR) + "/best_known.txt") == bundled_best_known_text());
}

TEST_CASE("record-code specs parse to the expected shapes") {
    for (const RecordCode& rc : record_codes()) {
        CodeSpec spec = parse_code_spec_text(rc.spec_text);
        CHECK(spec.field.q() == 2);
        CHECK(2 * spec.m == rc.n);
        CHECK(spec.matrix.s() == 2);
        CHECK(spec.matrix.l() == 2);
        CHECK(spec.matrix.at(0, 0).is_one());
        CHECK(spec.matrix.at(1, 0).is_zero());
        CHECK(spec.matrix.at(1, 1).is_one());
        CHECK(is_unit(spec.matrix.at(0, 1)));
        // nested constituents with the dimensions the parameters demand
        CyclicCode c1 = make_cyclic(spec.constituent_generators[0], spec.m, spec.field);
        CyclicCode c2 = make_cyclic(spec.constituent_generators[1], spec.m, spec.field);
        CHECK(is_nested(c1, c2));
        CHECK(c1.k + c2.k == rc.k);
    }
}

TEST_CASE("bundled best-known rows load through the table parser") {
    std::istringstream in(bundled_best_known_text());
    BestKnownTable table = load_best_known(in);
    CHECK(table.rows.size() == 7);
    CHECK(table.lookup(94, 25) == 26);
    CHECK(table.lookup(103, 29) == 27);
    for (const RecordCode& rc : record_codes()) {
        CHECK(table.lookup(rc.n, rc.k) == rc.best_known);
        CHECK(rc.d > rc.best_known);
    }
    for (const DerivedRecordCode& dc : derived_record_codes()) {
        CHECK(table.lookup(dc.n, dc.k) == dc.best_known);
        CHECK(dc.d > dc.best_known);
    }
}
