#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcmp/mindist.hpp"
#include "qcmp/mpu.hpp"

namespace qcmp {

// The search surface is binary: tables, sift criteria and ledgers all work
// over F_2, matching the cyclic-table and ledger file formats.

// ---------------------------------------------------------------------------
// Cyclic table
// ---------------------------------------------------------------------------

struct CyclicTableEntry {
    int m;
    Poly f;
    int k;
    std::optional<int> d;         // unknown when k was above the enumeration cap
    std::vector<Poly> min_words;  // filled exactly when d is known
};

struct CyclicTable {
    std::vector<CyclicTableEntry> entries;  // ascending m, divisor order within m

    const CyclicTableEntry* find(int m, const Poly& f) const;
    std::vector<const CyclicTableEntry*> at_length(int m) const;
};

// All nonzero cyclic codes for odd m <= max_m; d and minimum-weight words
// filled where k <= max_k_enum.
CyclicTable build_cyclic_table(int max_m, int max_k_enum, int workers = 0);

// File format: one record per line, `m;f;k;d(or ?);count_min_words`, plus a
// companion words file `path.words` with lines `m;f;h1|h2|...`.
void save_cyclic_table(const CyclicTable& table, const std::string& path);
CyclicTable load_cyclic_table(const std::string& path);

// ---------------------------------------------------------------------------
// Search configuration
// ---------------------------------------------------------------------------

struct GStrategy {
    enum class Kind { ExhaustiveToDegree, RandomSample, ExplicitList };
    Kind kind = Kind::ExhaustiveToDegree;
    int max_degree = 0;      // ExhaustiveToDegree
    int sample_count = 0;    // RandomSample
    std::vector<Poly> list;  // ExplicitList

    static GStrategy exhaustive_to_degree(int d);
    static GStrategy random_sample(int count);
    static GStrategy explicit_list(std::vector<Poly> polys);
};

enum class Quantifier { AllMinWords, SomeMinWord };

struct SearchConfig {
    int m_from = 3;
    int m_to = 9;
    int max_k_enum = kDefaultEnumCap;
    GStrategy g_strategy;
    Quantifier quantifier = Quantifier::AllMinWords;  // the weight test wt(f1 h1 g) > d1
    int total_k_cap = kBinaryDimensionGuard;          // k1 + k2 limit for exact evaluation
    uint64_t seed = 0;
    int workers = 0;
};

// ---------------------------------------------------------------------------
// Sift
// ---------------------------------------------------------------------------

struct SiftTriple {
    Poly f1, f2, g;
};

// Yields the triples with (i) f1 | f2 proper, (ii) d2 > 2 d1, (iii) g a unit
// whose weight test passes under config.quantifier over the cached
// minimum-weight multipliers h1 of (f1). Pairs whose required d is unknown
// are skipped with a note to `log`.
std::vector<SiftTriple> sift_candidates(int m, const CyclicTable& table, const SearchConfig& config,
                                        std::ostream* log = nullptr);

// ---------------------------------------------------------------------------
// Best-known table: lines `n,k,d` with `#` comments
// ---------------------------------------------------------------------------

struct BestKnownTable {
    std::map<std::pair<int, int>, int> rows;

    std::optional<int> lookup(int n, int k) const;
};

BestKnownTable load_best_known(std::istream& in);
BestKnownTable load_best_known_file(const std::string& path);

// ---------------------------------------------------------------------------
// Ledger
// ---------------------------------------------------------------------------

enum class Verdict { Improves, Matches, Below, Pending };
const char* to_string(Verdict v);

struct LedgerRecord {
    int m = 0;
    std::string f1, f2, g;  // polynomial text
    int n = 0, k = 0;
    int dstar = 0;
    std::optional<int> d_exact;        // absent while pending
    std::optional<int> best_known_d;   // absent when the table has no row
    Verdict verdict = Verdict::Pending;
    std::string witness;               // codeword bits of weight d_exact
    uint64_t seed = 0;
    std::string timestamp;             // ISO 8601 UTC; excluded from determinism
};

// One self-describing `key=value ...` line per record.
std::string ledger_line(const LedgerRecord& rec);
LedgerRecord parse_ledger_line(const std::string& line, int line_no);

// Loads a ledger, re-validating that every `improves` record carries a
// witness of weight d_exact.
std::vector<LedgerRecord> load_ledger(const std::string& path);

// Builds the MP code for the triple, computes d* and the exact distance,
// and compares against the best-known table. Candidates beyond total_k_cap
// come back pending.
LedgerRecord evaluate_candidate(const SiftTriple& triple, int m, const CyclicTable& table,
                                const BestKnownTable& best_known, const SearchConfig& config);

// ---------------------------------------------------------------------------
// Orchestration: sift every length in config, evaluate candidates not yet in
// the ledger, append records (single writer, candidate order).
// ---------------------------------------------------------------------------

struct SearchSummary {
    int candidates = 0;
    int evaluated = 0;
    int skipped_existing = 0;
    int improves = 0;
    int pending = 0;
};

SearchSummary run_search(const SearchConfig& config, const CyclicTable& table, const BestKnownTable& best_known,
                         const std::string& ledger_path, std::ostream& log);

}  // namespace qcmp
