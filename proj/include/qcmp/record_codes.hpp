#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcmp/mpu.hpp"

namespace qcmp {

// The seven published record codes this tool reproduces. C1..C3 are
// matrix-product codes with polynomial units given by bundled code-spec
// texts; C4..C7 derive from C3 by puncture/shorten/extend.

struct RecordCode {
    const char* name;
    const char* spec_text;  // code-spec file content, the canonical transcription
    int n, k, d;
    int best_known;  // previously best published distance at (n, k)
};

struct DerivedRecordCode {
    const char* name;
    const char* method;  // "puncture", "shorten" or "extend"
    const char* base;    // name of the code the operation applies to
    int pos;             // 1-based coordinate, 0 for extend
    int n, k, d;
    int best_known;
};

const std::vector<RecordCode>& record_codes();
const std::vector<DerivedRecordCode>& derived_record_codes();

// The bundled best-known rows (`n,k,d` lines) covering the record codes.
const char* bundled_best_known_text();

// Rebuilds C1..C7 and checks the eleven published parameter claims:
// the three (n, k, d) triples of C1..C3, the four derived (n, k) pairs and
// the four derived distances. Prints one line per claim; returns true when
// every claim checks out.
bool verify_record_codes(std::ostream& out, int workers = 0);

}  // namespace qcmp
