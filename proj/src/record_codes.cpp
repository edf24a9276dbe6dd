#include "qcmp/record_codes.hpp"

#include <map>
#include <ostream>

#include "qcmp/codeops.hpp"
#include "qcmp/mindist.hpp"

namespace qcmp {

namespace {

constexpr const char* kC1Spec =
    "q=2\n"
    "m=47\n"
    "f1=x^23+x^22+x^21+x^20+x^18+x^17+x^16+x^14+x^13+x^11+x^10+x^9+x^5+x^4+1\n"
    "f2=(x^47-1)/(x+1)\n"
    "A=[[1,g],[0,1]]\n"
    "g=x^20+x^19+x^13+x^12+x^11+x^9+x^7+x^4+x^3+x^2+1\n";

constexpr const char* kC2Spec =
    "q=2\n"
    "m=51\n"
    "f1=x^25+x^23+x^22+x^21+x^20+x^18+x^16+x^11+x^10+x^8+x^7+x^6+x^5+x^4+x+1\n"
    "f2=(x^51-1)/(x^2+x+1)\n"
    "A=[[1,g],[0,1]]\n"
    "g=x^20+x^15+x^14+x^10+x^9+x^7+1\n";

constexpr const char* kC3Spec =
    "q=2\n"
    "m=51\n"
    "f1=x^24+x^23+x^21+x^19+x^18+x^15+x^14+x^13+x^12+x^11+x^9+x^8+x^6+x^4+1\n"
    "f2=(x^51-1)/(x^2+x+1)\n"
    "A=[[1,g],[0,1]]\n"
    "g=x^50+x^49+x^48+x^46+x^44+x^43+x^42+x^41+x^38+x^37+x^36+x^34+x^32+x^29+x^27+x^25+x^24+x^19+x^17+x^15+x^13+x^12+x^10+x^8+x^5+x+1\n";

}  // namespace

const std::vector<RecordCode>& record_codes() {
    static const std::vector<RecordCode> codes = {
        {"C1", kC1Spec, 94, 25, 27, 26},
        {"C2", kC2Spec, 102, 28, 28, 27},
        {"C3", kC3Spec, 102, 29, 28, 26},
    };
    return codes;
}

const std::vector<DerivedRecordCode>& derived_record_codes() {
    static const std::vector<DerivedRecordCode> codes = {
        {"C4", "puncture", "C3", 102, 101, 29, 27, 26},
        {"C5", "shorten", "C3", 101, 101, 28, 28, 26},
        {"C6", "puncture", "C5", 101, 100, 28, 27, 26},
        {"C7", "extend", "C3", 0, 103, 29, 28, 27},
    };
    return codes;
}

const char* bundled_best_known_text() {
    return "# previously best published distances at the record-code parameters\n"
           "94,25,26\n"
           "102,28,27\n"
           "102,29,26\n"
           "101,29,26\n"
           "101,28,26\n"
           "100,28,26\n"
           "103,29,27\n";
}

bool verify_record_codes(std::ostream& out, int workers) {
    bool all_pass = true;
    auto report = [&](const std::string& claim, bool ok) {
        out << (ok ? "PASS" : "FAIL") << "  " << claim << '\n';
        all_pass = all_pass && ok;
    };

    std::map<std::string, LinearCode> built;
    for (const RecordCode& rc : record_codes()) {
        MPCode mp = build_from_spec(parse_code_spec_text(rc.spec_text));
        DistanceReport dist = min_distance_exhaustive(mp.code, workers);
        bool ok = mp.code.n() == rc.n && mp.code.dimension() == rc.k && dist.d == rc.d;
        report(std::string(rc.name) + " [" + std::to_string(mp.code.n()) + "," +
                   std::to_string(mp.code.dimension()) + "," + std::to_string(dist.d) + "] expected [" +
                   std::to_string(rc.n) + "," + std::to_string(rc.k) + "," + std::to_string(rc.d) + "]",
               ok);
        built.emplace(rc.name, mp.code);
    }

    for (const DerivedRecordCode& dc : derived_record_codes()) {
        auto base = built.find(dc.base);
        if (base == built.end()) {
            report(std::string(dc.name) + " base code " + dc.base + " unavailable", false);
            continue;
        }
        std::string method = dc.method;
        LinearCode derived = method == "puncture" ? puncture(base->second, dc.pos)
                             : method == "shorten" ? shorten(base->second, dc.pos)
                                                   : extend(base->second);
        std::string label = std::string(dc.name) + " = " + method + "(" + dc.base +
                            (dc.pos > 0 ? "," + std::to_string(dc.pos) : "") + ")";
        bool nk_ok = derived.n() == dc.n && derived.dimension() == dc.k;
        report(label + " (n,k)=(" + std::to_string(derived.n()) + "," + std::to_string(derived.dimension()) +
                   ") expected (" + std::to_string(dc.n) + "," + std::to_string(dc.k) + ")",
               nk_ok);
        DistanceReport dist = min_distance_exhaustive(derived, workers);
        report(label + " d=" + std::to_string(dist.d) + " expected " + std::to_string(dc.d), dist.d == dc.d);
        built.emplace(dc.name, derived);
    }
    return all_pass;
}

}  // namespace qcmp
