#include "doctest.h"

#include <cstdio>
#include <unistd.h>
#include <fstream>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "qcmp/record_codes.hpp"
#include "qcmp/search.hpp"

using namespace qcmp;

namespace {

const FieldSpec F2(2);

std::string temp_path(const char* tag) {
    return std::string("qcmp_test_") + tag + "_" + std::to_string(::getpid());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// drop ts=... tokens so runs can be compared byte-for-byte
std::string strip_timestamps(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        size_t pos = line.find(" ts=");
        out << (pos == std::string::npos ? line : line.substr(0, pos)) << '\n';
    }
    return out.str();
}

struct TempFiles {
    std::vector<std::string> paths;
    ~TempFiles() {
        for (const std::string& p : paths) std::remove(p.c_str());
    }
    const std::string& add(std::string p) {
        paths.push_back(std::move(p));
        return paths.back();
    }
};

// Brute-force sift filter: tests every (f1, f2, g) directly, with distances
// and word lists from naive codeword enumeration.
std::set<std::string> brute_force_sift(int m) {
    std::set<std::string> out;
    std::vector<CyclicCode> divisors = enumerate_divisors(m, F2);
    for (const CyclicCode& a : divisors) {
        LinearCode ga = generator_matrix(a);
        int d1 = test::naive_min_distance(ga.rows(), m, F2);
        // all h with wt(h f1) == d1, by direct products
        std::vector<Poly> h1s;
        for (uint64_t bits = 1; bits < (uint64_t{1} << a.k); ++bits) {
            std::vector<uint32_t> c;
            for (int i = 0; i < a.k; ++i) c.push_back(static_cast<uint32_t>((bits >> i) & 1));
            Poly h(std::move(c));
            if (poly_weight(poly_mod_xm1(poly_mul(h, a.f, F2), m, F2)) == d1) h1s.push_back(h);
        }
        for (const CyclicCode& b : divisors) {
            if (a.f == b.f) continue;
            if (!poly_divides(a.f, b.f, F2)) continue;
            LinearCode gb = generator_matrix(b);
            int d2 = test::naive_min_distance(gb.rows(), m, F2);
            if (!(d2 > 2 * d1)) continue;
            for (uint64_t gbits = 1; gbits < (uint64_t{1} << m); ++gbits) {
                std::vector<uint32_t> c;
                for (int i = 0; i < m; ++i) c.push_back(static_cast<uint32_t>((gbits >> i) & 1));
                Poly g(std::move(c));
                if (!is_unit(RingElement(g, m, F2))) continue;
                bool all_pass = true;
                for (const Poly& h1 : h1s) {
                    Poly w = poly_mod_xm1(poly_mul(poly_mul(h1, a.f, F2), g, F2), m, F2);
                    if (poly_weight(w) <= d1) {
                        all_pass = false;
                        break;
                    }
                }
                if (all_pass) {
                    out.insert(poly_to_text(a.f, F2) + "|" + poly_to_text(b.f, F2) + "|" + poly_to_text(g, F2));
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("build_cyclic_table covers all odd lengths with known distances") {
    CyclicTable table = build_cyclic_table(7, 28);
    std::set<int> lengths;
    for (const CyclicTableEntry& e : table.entries) {
        lengths.insert(e.m);
        CHECK(e.d.has_value());
        CHECK(!e.min_words.empty());
    }
    CHECK(lengths == std::set<int>{1, 3, 5, 7});
    CHECK(table.at_length(7).size() == 7);
}

TEST_CASE("the table at m = 51 carries the dimensions the record codes use") {
    CyclicTable table = build_cyclic_table(51, 2);  // distances only where k <= 2
    std::set<int> ks;
    for (const CyclicTableEntry* e : table.at_length(51)) {
        ks.insert(e->k);
        if (e->k <= 2) {
            CHECK(e->d.has_value());
        } else {
            CHECK_FALSE(e->d.has_value());
        }
    }
    CHECK(ks.count(2) == 1);   // (x^51-1)/(x^2+x+1)
    CHECK(ks.count(26) == 1);  // the degree-25 generator
    CHECK(ks.count(27) == 1);  // the degree-24 generator
    CHECK(table.at_length(51).size() == 255);  // 2^8 - 1 divisors
}

TEST_CASE("cyclic table file round-trips") {
    TempFiles tmp;
    const std::string path = tmp.add(temp_path("table"));
    tmp.add(path + ".words");

    CyclicTable table = build_cyclic_table(9, 4);  // some entries above the cap
    bool unknown_seen = false;
    for (const CyclicTableEntry& e : table.entries) unknown_seen = unknown_seen || !e.d;
    CHECK(unknown_seen);

    save_cyclic_table(table, path);
    CyclicTable reread = load_cyclic_table(path);
    REQUIRE(reread.entries.size() == table.entries.size());
    for (size_t i = 0; i < table.entries.size(); ++i) {
        CHECK(reread.entries[i].m == table.entries[i].m);
        CHECK(reread.entries[i].f == table.entries[i].f);
        CHECK(reread.entries[i].k == table.entries[i].k);
        CHECK(reread.entries[i].d == table.entries[i].d);
        CHECK(reread.entries[i].min_words == table.entries[i].min_words);
    }
}

TEST_CASE("sift matches the brute-force filter at m = 7") {
    CyclicTable table = build_cyclic_table(7, 28);
    SearchConfig config;
    config.g_strategy = GStrategy::exhaustive_to_degree(6);
    config.quantifier = Quantifier::AllMinWords;

    std::set<std::string> sifted;
    for (const SiftTriple& t : sift_candidates(7, table, config)) {
        sifted.insert(poly_to_text(t.f1, F2) + "|" + poly_to_text(t.f2, F2) + "|" + poly_to_text(t.g, F2));
    }
    std::set<std::string> brute = brute_force_sift(7);
    CHECK(!brute.empty());
    CHECK(sifted == brute);
}

TEST_CASE("sift skips entries with unknown distance and logs them") {
    CyclicTable table = build_cyclic_table(7, 3);  // k > 3 entries carry no d
    SearchConfig config;
    config.g_strategy = GStrategy::exhaustive_to_degree(6);
    std::ostringstream log;
    sift_candidates(7, table, config, &log);
    CHECK(log.str().find("distance unknown") != std::string::npos);
}

TEST_CASE("the first record triple sifts through at m = 47") {
    CyclicTable table;
    for (const CyclicCode& code : enumerate_divisors(47, F2)) {
        CyclicTableEntry e{47, code.f, code.k, std::nullopt, {}};
        if (code.k <= 24) {
            MinWeightResult r = min_weight_words(code, 24, 2);
            e.d = r.d;
            e.min_words = std::move(r.words);
        }
        table.entries.push_back(std::move(e));
    }

    CodeSpec spec = parse_code_spec_text(record_codes()[0].spec_text);
    Poly g = spec.matrix.at(0, 1).poly();
    SearchConfig config;
    config.g_strategy = GStrategy::explicit_list({g});

    std::vector<SiftTriple> triples = sift_candidates(47, table, config);
    bool found = false;
    for (const SiftTriple& t : triples) {
        found = found || (t.f1 == spec.constituent_generators[0] && t.f2 == spec.constituent_generators[1] &&
                          t.g == g);
    }
    CHECK(found);

    // evaluating it reproduces the ledger row of the first record code
    BestKnownTable best;
    {
        std::istringstream in(bundled_best_known_text());
        best = load_best_known(in);
    }
    config.workers = 2;
    SiftTriple triple{spec.constituent_generators[0], spec.constituent_generators[1], g};
    LedgerRecord rec = evaluate_candidate(triple, 47, table, best, config);
    CHECK(rec.n == 94);
    CHECK(rec.k == 25);
    CHECK(rec.dstar == 22);  // min(2*11, 47)
    REQUIRE(rec.d_exact.has_value());
    CHECK(*rec.d_exact == 27);
    CHECK(rec.best_known_d == 26);
    CHECK(rec.verdict == Verdict::Improves);
    int wt = 0;
    for (char ch : rec.witness) wt += (ch == '1');
    CHECK(wt == 27);
}

TEST_CASE("best-known table parsing") {
    std::istringstream in("# comment\n94,25,26\n103, 29, 27\n\n");
    BestKnownTable t = load_best_known(in);
    CHECK(t.lookup(94, 25) == 26);
    CHECK(t.lookup(103, 29) == 27);
    CHECK_FALSE(t.lookup(10, 5).has_value());

    std::istringstream bad("94,25\n");
    CHECK_THROWS_AS(load_best_known(bad), ParseError);
    std::istringstream nonpos("94,25,0\n");
    CHECK_THROWS_AS(load_best_known(nonpos), ParseError);
    std::istringstream nonmono("10,4,3\n10,5,4\n");
    CHECK_THROWS_AS(load_best_known(nonmono), ParseError);
}

TEST_CASE("ledger lines round-trip") {
    LedgerRecord rec;
    rec.m = 7;
    rec.f1 = "x^3+x+1";
    rec.f2 = "x^6+x^5+x^4+x^3+x^2+x+1";
    rec.g = "x^2+x+1";
    rec.n = 14;
    rec.k = 5;
    rec.dstar = 6;
    rec.d_exact = 6;
    rec.best_known_d = 6;
    rec.verdict = Verdict::Matches;
    rec.witness = "01100110011000";
    rec.seed = 42;
    rec.timestamp = "2026-01-01T00:00:00Z";

    LedgerRecord back = parse_ledger_line(ledger_line(rec), 1);
    CHECK(back.m == rec.m);
    CHECK(back.f1 == rec.f1);
    CHECK(back.f2 == rec.f2);
    CHECK(back.g == rec.g);
    CHECK(back.n == rec.n);
    CHECK(back.k == rec.k);
    CHECK(back.dstar == rec.dstar);
    CHECK(back.d_exact == rec.d_exact);
    CHECK(back.best_known_d == rec.best_known_d);
    CHECK(back.verdict == rec.verdict);
    CHECK(back.witness == rec.witness);
    CHECK(back.seed == rec.seed);
    CHECK(back.timestamp == rec.timestamp);

    CHECK_THROWS_AS(parse_ledger_line("m=7 junk", 3), ParseError);
}

TEST_CASE("improves records are re-validated on load") {
    TempFiles tmp;
    const std::string path = tmp.add(temp_path("badledger"));
    {
        std::ofstream out(path);
        out << "m=7 f1=x+1 f2=x^2+1 g=x n=14 k=5 dstar=6 d=6 best=5 verdict=improves witness=1100 seed=0 "
               "ts=2026-01-01T00:00:00Z\n";
    }
    CHECK_THROWS_AS(load_ledger(path), ParseError);
}

TEST_CASE("search runs are deterministic and resumable") {
    CyclicTable table = build_cyclic_table(9, 28);
    BestKnownTable best;  // empty: verdicts come back pending
    SearchConfig config;
    config.m_from = 3;
    config.m_to = 9;
    config.g_strategy = GStrategy::random_sample(40);
    config.seed = 12345;
    config.workers = 1;

    TempFiles tmp;
    const std::string ledger1 = tmp.add(temp_path("ledger1"));
    const std::string ledger2 = tmp.add(temp_path("ledger2"));

    std::ostringstream log;
    SearchSummary s1 = run_search(config, table, best, ledger1, log);
    SearchSummary s2 = run_search(config, table, best, ledger2, log);
    CHECK(s1.evaluated == s2.evaluated);
    CHECK(strip_timestamps(slurp(ledger1)) == strip_timestamps(slurp(ledger2)));
    CHECK(s1.evaluated > 0);

    // resume: nothing is recomputed, the file does not change
    std::string before = slurp(ledger1);
    SearchSummary s3 = run_search(config, table, best, ledger1, log);
    CHECK(s3.evaluated == 0);
    CHECK(s3.skipped_existing == s1.evaluated);
    CHECK(slurp(ledger1) == before);

    // records load back and satisfy the ledger invariants
    for (const LedgerRecord& rec : load_ledger(ledger1)) {
        CHECK(rec.n == 2 * rec.m);
        if (rec.d_exact) {
            int wt = 0;
            for (char ch : rec.witness) wt += (ch == '1');
            CHECK(wt == *rec.d_exact);
        }
    }
}
