#include "qcmp/search.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace qcmp {

namespace {

const FieldSpec& f2() {
    static const FieldSpec F(2);
    return F;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cyclic table
// ---------------------------------------------------------------------------

const CyclicTableEntry* CyclicTable::find(int m, const Poly& f) const {
    for (const CyclicTableEntry& e : entries) {
        if (e.m == m && e.f == f) return &e;
    }
    return nullptr;
}

std::vector<const CyclicTableEntry*> CyclicTable::at_length(int m) const {
    std::vector<const CyclicTableEntry*> out;
    for (const CyclicTableEntry& e : entries) {
        if (e.m == m) out.push_back(&e);
    }
    return out;
}

CyclicTable build_cyclic_table(int max_m, int max_k_enum, int workers) {
    CyclicTable table;
    for (int m = 1; m <= max_m; m += 2) {
        for (const CyclicCode& code : enumerate_divisors(m, f2())) {
            CyclicTableEntry entry{m, code.f, code.k, std::nullopt, {}};
            if (code.k <= max_k_enum) {
                MinWeightResult r = min_weight_words(code, max_k_enum, workers);
                entry.d = r.d;
                entry.min_words = std::move(r.words);
            }
            table.entries.push_back(std::move(entry));
        }
    }
    return table;
}

void save_cyclic_table(const CyclicTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    std::ofstream words(path + ".words", std::ios::binary);
    if (!words) throw ParseError("cannot open '" + path + ".words' for writing");
    for (const CyclicTableEntry& e : table.entries) {
        std::string f_text = poly_to_text(e.f, f2());
        out << e.m << ';' << f_text << ';' << e.k << ';';
        if (e.d) {
            out << *e.d;
        } else {
            out << '?';
        }
        out << ';' << e.min_words.size() << '\n';
        if (!e.min_words.empty()) {
            words << e.m << ';' << f_text << ';';
            for (size_t i = 0; i < e.min_words.size(); ++i) {
                if (i) words << '|';
                words << poly_to_text(e.min_words[i], f2());
            }
            words << '\n';
        }
    }
}

CyclicTable load_cyclic_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    CyclicTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> parts;
        size_t pos = 0;
        while (true) {
            size_t sep = line.find(';', pos);
            parts.push_back(line.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos));
            if (sep == std::string::npos) break;
            pos = sep + 1;
        }
        if (parts.size() != 5) {
            throw ParseError("cyclic table '" + path + "' line " + std::to_string(line_no) +
                             ": expected m;f;k;d;count");
        }
        CyclicTableEntry e;
        e.m = std::stoi(parts[0]);
        e.f = parse_poly(parts[1], f2());
        e.k = std::stoi(parts[2]);
        if (parts[3] != "?") e.d = std::stoi(parts[3]);
        size_t count = std::stoul(parts[4]);
        e.min_words.reserve(count);
        table.entries.push_back(std::move(e));
    }

    std::ifstream words(path + ".words", std::ios::binary);
    if (words) {
        line_no = 0;
        while (std::getline(words, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            size_t s1 = line.find(';');
            size_t s2 = line.find(';', s1 + 1);
            if (s1 == std::string::npos || s2 == std::string::npos) {
                throw ParseError("words file line " + std::to_string(line_no) + ": expected m;f;h|h|...");
            }
            int m = std::stoi(line.substr(0, s1));
            Poly f = parse_poly(line.substr(s1 + 1, s2 - s1 - 1), f2());
            CyclicTableEntry* entry = nullptr;
            for (CyclicTableEntry& e : table.entries) {
                if (e.m == m && e.f == f) {
                    entry = &e;
                    break;
                }
            }
            if (entry == nullptr) {
                throw ParseError("words file line " + std::to_string(line_no) + ": no table entry for m=" +
                                 std::to_string(m));
            }
            std::string rest = line.substr(s2 + 1);
            size_t p = 0;
            while (true) {
                size_t bar = rest.find('|', p);
                entry->min_words.push_back(
                    parse_poly(rest.substr(p, bar == std::string::npos ? std::string::npos : bar - p), f2()));
                if (bar == std::string::npos) break;
                p = bar + 1;
            }
        }
    }
    for (const CyclicTableEntry& e : table.entries) {
        if (e.d && e.min_words.empty()) {
            throw ParseError("cyclic table entry m=" + std::to_string(e.m) + " f=" + poly_to_text(e.f, f2()) +
                             " has d but no words; companion file missing or stale");
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// G strategies
// ---------------------------------------------------------------------------

GStrategy GStrategy::exhaustive_to_degree(int d) {
    GStrategy s;
    s.kind = Kind::ExhaustiveToDegree;
    s.max_degree = d;
    return s;
}

GStrategy GStrategy::random_sample(int count) {
    GStrategy s;
    s.kind = Kind::RandomSample;
    s.sample_count = count;
    return s;
}

GStrategy GStrategy::explicit_list(std::vector<Poly> polys) {
    GStrategy s;
    s.kind = Kind::ExplicitList;
    s.list = std::move(polys);
    return s;
}

namespace {

// Unit candidates for g in deterministic order; duplicates removed.
std::vector<Poly> g_candidates(int m, const SearchConfig& config) {
    std::vector<Poly> out;
    const GStrategy& gs = config.g_strategy;
    switch (gs.kind) {
        case GStrategy::Kind::ExhaustiveToDegree: {
            int deg = std::min(gs.max_degree, m - 1);
            if (deg > 26) throw CapExceeded("exhaustive g search above degree 26 is not tractable");
            for (uint64_t mask = 1; mask < (uint64_t{1} << (deg + 1)); ++mask) {
                std::vector<uint32_t> c;
                uint64_t v = mask;
                while (v != 0) {
                    c.push_back(static_cast<uint32_t>(v & 1));
                    v >>= 1;
                }
                Poly p(std::move(c));
                if (is_unit(RingElement(p, m, f2()))) out.push_back(p);
            }
            break;
        }
        case GStrategy::Kind::RandomSample: {
            std::mt19937_64 rng(config.seed);
            std::set<std::vector<uint32_t>> seen;
            for (int i = 0; i < gs.sample_count; ++i) {
                std::vector<uint32_t> c(static_cast<size_t>(m), 0);
                for (int j = 0; j < m; ++j) c[static_cast<size_t>(j)] = static_cast<uint32_t>(rng() & 1);
                Poly p(std::move(c));
                if (p.is_zero()) continue;
                if (!seen.insert(p.coeffs()).second) continue;
                if (is_unit(RingElement(p, m, f2()))) out.push_back(p);
            }
            break;
        }
        case GStrategy::Kind::ExplicitList: {
            for (const Poly& p : gs.list) {
                if (is_unit(RingElement(p, m, f2()))) out.push_back(p);
            }
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<SiftTriple> sift_candidates(int m, const CyclicTable& table, const SearchConfig& config,
                                        std::ostream* log) {
    std::vector<const CyclicTableEntry*> entries = table.at_length(m);
    std::vector<Poly> gs = g_candidates(m, config);
    std::vector<SiftTriple> out;

    for (const CyclicTableEntry* e1 : entries) {
        for (const CyclicTableEntry* e2 : entries) {
            if (e1 == e2) continue;
            // (i) nested: f1 | f2 proper
            if (!poly_divides(e1->f, e2->f, f2())) continue;
            if (!e1->d || !e2->d) {
                if (log) {
                    *log << "skip m=" << m << " f1=" << poly_to_text(e1->f, f2())
                         << " f2=" << poly_to_text(e2->f, f2()) << ": distance unknown (k above cap)\n";
                }
                continue;
            }
            // (ii) d2 > 2 d1
            if (!(*e2->d > 2 * *e1->d)) continue;

            // (iii) unit g passing the weight test over the h1 list
            for (const Poly& g : gs) {
                RingElement gr(g, m, f2());
                bool pass;
                if (config.quantifier == Quantifier::AllMinWords) {
                    pass = true;
                    for (const Poly& h1 : e1->min_words) {
                        RingElement w = ring_mul(RingElement(poly_mul(h1, e1->f, f2()), m, f2()), gr);
                        if (poly_weight(w.poly()) <= *e1->d) {
                            pass = false;
                            break;
                        }
                    }
                } else {
                    pass = false;
                    for (const Poly& h1 : e1->min_words) {
                        RingElement w = ring_mul(RingElement(poly_mul(h1, e1->f, f2()), m, f2()), gr);
                        if (poly_weight(w.poly()) > *e1->d) {
                            pass = true;
                            break;
                        }
                    }
                }
                if (pass) out.push_back(SiftTriple{e1->f, e2->f, g});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Best-known table
// ---------------------------------------------------------------------------

std::optional<int> BestKnownTable::lookup(int n, int k) const {
    auto it = rows.find({n, k});
    if (it == rows.end()) return std::nullopt;
    return it->second;
}

BestKnownTable load_best_known(std::istream& in) {
    BestKnownTable table;
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
        int n, k, d;
        char c1, c2;
        std::istringstream ls(trimmed);
        if (!(ls >> n >> c1 >> k >> c2 >> d) || c1 != ',' || c2 != ',' || (ls >> std::ws, !ls.eof())) {
            throw ParseError("best-known table line " + std::to_string(line_no) + ": expected n,k,d");
        }
        if (d <= 0) throw ParseError("best-known table line " + std::to_string(line_no) + ": d must be positive");
        table.rows[{n, k}] = d;
    }
    // monotone sanity: d(n, k) >= d(n, k+1)
    for (const auto& [key, d] : table.rows) {
        auto next = table.rows.find({key.first, key.second + 1});
        if (next != table.rows.end() && d < next->second) {
            throw ParseError("best-known table violates monotonicity at n=" + std::to_string(key.first) +
                             ", k=" + std::to_string(key.second));
        }
    }
    return table;
}

BestKnownTable load_best_known_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_best_known(in);
}

// ---------------------------------------------------------------------------
// Ledger
// ---------------------------------------------------------------------------

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Improves: return "improves";
        case Verdict::Matches: return "matches";
        case Verdict::Below: return "below";
        case Verdict::Pending: return "pending";
    }
    return "pending";
}

namespace {

Verdict verdict_from_string(const std::string& s, int line_no) {
    if (s == "improves") return Verdict::Improves;
    if (s == "matches") return Verdict::Matches;
    if (s == "below") return Verdict::Below;
    if (s == "pending") return Verdict::Pending;
    throw ParseError("ledger line " + std::to_string(line_no) + ": unknown verdict '" + s + "'");
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string ledger_line(const LedgerRecord& rec) {
    std::ostringstream out;
    out << "m=" << rec.m << " f1=" << rec.f1 << " f2=" << rec.f2 << " g=" << rec.g << " n=" << rec.n
        << " k=" << rec.k << " dstar=" << rec.dstar;
    out << " d=";
    if (rec.d_exact) {
        out << *rec.d_exact;
    } else {
        out << "pending";
    }
    out << " best=";
    if (rec.best_known_d) {
        out << *rec.best_known_d;
    } else {
        out << "?";
    }
    out << " verdict=" << to_string(rec.verdict);
    if (!rec.witness.empty()) out << " witness=" << rec.witness;
    out << " seed=" << rec.seed;
    out << " ts=" << rec.timestamp;
    return out.str();
}

LedgerRecord parse_ledger_line(const std::string& line, int line_no) {
    LedgerRecord rec;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        size_t eq = token.find('=');
        if (eq == std::string::npos) {
            throw ParseError("ledger line " + std::to_string(line_no) + ": token '" + token + "' is not key=value");
        }
        std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        if (key == "m") rec.m = std::stoi(value);
        else if (key == "f1") rec.f1 = value;
        else if (key == "f2") rec.f2 = value;
        else if (key == "g") rec.g = value;
        else if (key == "n") rec.n = std::stoi(value);
        else if (key == "k") rec.k = std::stoi(value);
        else if (key == "dstar") rec.dstar = std::stoi(value);
        else if (key == "d") rec.d_exact = (value == "pending") ? std::nullopt : std::optional<int>(std::stoi(value));
        else if (key == "best") rec.best_known_d = (value == "?") ? std::nullopt : std::optional<int>(std::stoi(value));
        else if (key == "verdict") rec.verdict = verdict_from_string(value, line_no);
        else if (key == "witness") rec.witness = value;
        else if (key == "seed") rec.seed = std::stoull(value);
        else if (key == "ts") rec.timestamp = value;
        else throw ParseError("ledger line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (rec.m == 0 || rec.f1.empty() || rec.f2.empty() || rec.g.empty()) {
        throw ParseError("ledger line " + std::to_string(line_no) + ": incomplete record");
    }
    return rec;
}

std::vector<LedgerRecord> load_ledger(const std::string& path) {
    std::vector<LedgerRecord> records;
    std::ifstream in(path, std::ios::binary);
    if (!in) return records;  // absent ledger is an empty ledger
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        LedgerRecord rec = parse_ledger_line(line, line_no);
        if (rec.verdict == Verdict::Improves) {
            if (!rec.d_exact) {
                throw ParseError("ledger line " + std::to_string(line_no) + ": improves without d");
            }
            int w = 0;
            for (char c : rec.witness) w += (c == '1');
            if (rec.witness.empty() || w != *rec.d_exact) {
                throw ParseError("ledger line " + std::to_string(line_no) +
                                 ": improves verdict with witness weight != d");
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

LedgerRecord evaluate_candidate(const SiftTriple& triple, int m, const CyclicTable& table,
                                const BestKnownTable& best_known, const SearchConfig& config) {
    const FieldSpec& F = f2();
    const CyclicTableEntry* e1 = table.find(m, triple.f1);
    const CyclicTableEntry* e2 = table.find(m, triple.f2);
    if (e1 == nullptr || e2 == nullptr || !e1->d || !e2->d) {
        throw MissingWordCache("candidate constituents are not in the table with known d");
    }

    LedgerRecord rec;
    rec.m = m;
    rec.f1 = poly_to_text(triple.f1, F);
    rec.f2 = poly_to_text(triple.f2, F);
    rec.g = poly_to_text(triple.g, F);
    rec.n = 2 * m;
    rec.k = e1->k + e2->k;
    rec.seed = config.seed;
    rec.timestamp = utc_timestamp();

    // d* for the canonical ((1,g),(0,1)) shape: D_1 = 2, D_2 = 1
    rec.dstar = std::min(2 * *e1->d, *e2->d);
    rec.best_known_d = best_known.lookup(rec.n, rec.k);

    if (rec.k > config.total_k_cap) {
        rec.verdict = Verdict::Pending;
        return rec;
    }

    UnitMatrix A = canonical_2x2(RingElement(triple.g, m, F));
    std::vector<CyclicCode> codes{make_cyclic(triple.f1, m, F), make_cyclic(triple.f2, m, F)};
    MPCode mp = build_mp(codes, A);
    DistanceReport report = min_distance_exhaustive(mp.code, config.workers);
    rec.d_exact = report.d;
    std::string witness;
    witness.reserve(report.witness.size());
    for (uint32_t v : report.witness) witness.push_back(v ? '1' : '0');
    rec.witness = std::move(witness);

    if (!rec.best_known_d) {
        rec.verdict = Verdict::Pending;  // nothing to compare against
    } else if (*rec.d_exact > *rec.best_known_d) {
        rec.verdict = Verdict::Improves;
    } else if (*rec.d_exact == *rec.best_known_d) {
        rec.verdict = Verdict::Matches;
    } else {
        rec.verdict = Verdict::Below;
    }
    return rec;
}

SearchSummary run_search(const SearchConfig& config, const CyclicTable& table, const BestKnownTable& best_known,
                         const std::string& ledger_path, std::ostream& log) {
    SearchSummary summary;

    // resume: skip triples already in the ledger
    std::set<std::string> done;
    for (const LedgerRecord& rec : load_ledger(ledger_path)) {
        done.insert(std::to_string(rec.m) + "|" + rec.f1 + "|" + rec.f2 + "|" + rec.g);
    }

    std::ofstream out(ledger_path, std::ios::binary | std::ios::app);
    if (!out) throw ParseError("cannot open ledger '" + ledger_path + "' for appending");

    const FieldSpec& F = f2();
    for (int m = config.m_from; m <= config.m_to; ++m) {
        if (m % 2 == 0) continue;
        std::vector<SiftTriple> triples = sift_candidates(m, table, config, &log);
        summary.candidates += static_cast<int>(triples.size());
        for (const SiftTriple& t : triples) {
            std::string key = std::to_string(m) + "|" + poly_to_text(t.f1, F) + "|" + poly_to_text(t.f2, F) + "|" +
                              poly_to_text(t.g, F);
            if (done.count(key)) {
                ++summary.skipped_existing;
                continue;
            }
            LedgerRecord rec = evaluate_candidate(t, m, table, best_known, config);
            out << ledger_line(rec) << '\n';
            out.flush();
            ++summary.evaluated;
            if (rec.verdict == Verdict::Improves) ++summary.improves;
            if (rec.verdict == Verdict::Pending) ++summary.pending;
        }
    }
    return summary;
}

}  // namespace qcmp
