// End-to-end checks of the qcmp command-line surface: every file one
// subcommand emits must be accepted bit-exactly by the subcommands that
// consume that format. Run as: cli_roundtrip <path-to-qcmp> <data-dir>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcmp/codeops.hpp"
#include "qcmp/mindist.hpp"
#include "qcmp/search.hpp"

using namespace qcmp;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "ok" : "FAIL") << "  " << what << '\n';
    if (!ok) ++g_failures;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& command) {
    std::string out_file = "cli_out.tmp";
    int status = std::system((command + " > " + out_file + " 2> cli_err.tmp").c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.stdout_text = slurp(out_file);
    return r;
}

// first value of `key=value` in a report line
std::string field(const std::string& text, const std::string& key) {
    size_t pos = text.find(key + "=");
    if (pos == std::string::npos) return "";
    size_t start = pos + key.size() + 1;
    size_t end = text.find_first_of(" \n", start);
    return text.substr(start, end - start);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_roundtrip <qcmp-binary> <data-dir>\n";
        return 2;
    }
    const std::string qcmp = argv[1];
    const std::string data = argv[2];
    const FieldSpec F2(2);

    // factor output multiplies back to x^m - 1
    {
        RunResult r = run(qcmp + " factor --m 7");
        check(r.exit_code == 0, "factor exits 0");
        std::istringstream lines(r.stdout_text);
        std::string line;
        Poly prod = Poly::one();
        int count = 0;
        while (std::getline(lines, line)) {
            if (line.empty()) continue;
            prod = poly_mul(prod, parse_poly(line, F2), F2);
            ++count;
        }
        check(count == 3, "factor --m 7 prints three factors");
        check(prod == xm_minus_1(7, F2), "factor output multiplies back to x^7-1");
    }

    // construct -> mindist -> ops round trip on a bundled record spec
    {
        RunResult c = run(qcmp + " construct --spec " + data + "/C1.codespec --out c1.gm");
        check(c.exit_code == 0, "construct exits 0");
        check(field(c.stdout_text, "n") == "94" && field(c.stdout_text, "k") == "25",
              "construct reports n=94 k=25");
        check(field(c.stdout_text, "certificate") == "holds", "construct certifies full rank");

        LinearCode code = read_generator_matrix_file("c1.gm");
        check(code.n() == 94 && code.dimension() == 25, "emitted gm file parses to [94,25]");

        RunResult d = run(qcmp + " mindist --gm c1.gm --workers 2");
        check(d.exit_code == 0, "mindist exits 0");
        check(field(d.stdout_text, "d") == "27", "mindist reports d=27");
        std::string witness = field(d.stdout_text, "witness");
        int wt = 0;
        for (char ch : witness) wt += (ch == '1');
        check(wt == 27, "reported witness has weight 27");

        RunResult p = run(qcmp + " ops puncture --gm c1.gm --pos 94 --out c1p.gm");
        check(p.exit_code == 0, "ops puncture exits 0");
        LinearCode punctured = read_generator_matrix_file("c1p.gm");
        check(punctured.n() == 93, "punctured gm file has n=93");

        RunResult e = run(qcmp + " ops extend --gm c1.gm --out c1e.gm");
        check(e.exit_code == 0 && read_generator_matrix_file("c1e.gm").n() == 95, "ops extend writes n=95");

        RunResult s = run(qcmp + " ops shorten --gm c1.gm --pos 1 --out c1s.gm");
        check(s.exit_code == 0 && read_generator_matrix_file("c1s.gm").dimension() == 24,
              "ops shorten drops the dimension by one");
    }

    // bound and lowweight agree with the record parameters
    {
        RunResult b = run(qcmp + " bound --spec " + data + "/C1.codespec --max-k 24 --workers 2");
        check(b.exit_code == 0, "bound exits 0");
        check(field(b.stdout_text, "d1") == "11" && field(b.stdout_text, "D1") == "2" &&
                  field(b.stdout_text, "d2") == "47" && field(b.stdout_text, "D2") == "1" &&
                  field(b.stdout_text, "dstar") == "22",
              "bound reports d1=11 D1=2 d2=47 D2=1 dstar=22");

        RunResult lw = run(qcmp + " lowweight --spec " + data + "/C1.codespec --max-k 24 --workers 2");
        check(lw.exit_code == 0, "lowweight exits 0");
        int upper = std::stoi(field(lw.stdout_text, "upper"));
        check(upper >= 27, "candidate upper bound is >= 27");
    }

    // cyclic-table file round trip through the library loader
    {
        RunResult t = run(qcmp + " cyclic-table --max-m 7 --max-k 28 --out table.txt");
        check(t.exit_code == 0, "cyclic-table exits 0");
        CyclicTable loaded = load_cyclic_table("table.txt");
        CyclicTable rebuilt = build_cyclic_table(7, 28);
        bool equal = loaded.entries.size() == rebuilt.entries.size();
        for (size_t i = 0; equal && i < loaded.entries.size(); ++i) {
            equal = loaded.entries[i].m == rebuilt.entries[i].m && loaded.entries[i].f == rebuilt.entries[i].f &&
                    loaded.entries[i].k == rebuilt.entries[i].k && loaded.entries[i].d == rebuilt.entries[i].d &&
                    loaded.entries[i].min_words == rebuilt.entries[i].min_words;
        }
        check(equal, "cyclic-table file round-trips through the loader");
    }

    // search appends a ledger, resumes without recomputing
    {
        std::remove("search.ledger");
        std::string cmd = qcmp + " search --m-range 3..9 --g-strategy random:25 --seed 7 --best-known " + data +
                          "/best_known.txt --ledger search.ledger --table table9.txt";
        run(qcmp + " cyclic-table --max-m 9 --max-k 28 --out table9.txt");
        RunResult s1 = run(cmd);
        check(s1.exit_code == 0, "search exits 0");
        int evaluated = std::stoi(field(s1.stdout_text, "evaluated"));
        check(evaluated > 0, "search evaluates candidates");
        std::string ledger_before = slurp("search.ledger");
        for (const LedgerRecord& rec : load_ledger("search.ledger")) {
            check(rec.n == 2 * rec.m, "ledger record has n=2m");
            break;
        }
        RunResult s2 = run(cmd);
        check(std::stoi(field(s2.stdout_text, "evaluated")) == 0, "rerun evaluates nothing");
        check(std::stoi(field(s2.stdout_text, "skipped")) == evaluated, "rerun skips completed records");
        check(slurp("search.ledger") == ledger_before, "rerun leaves the ledger untouched");
    }

    // verify-paper is hermetic: run from an empty scratch directory
    {
        if (std::system("mkdir -p hermetic && rm -f hermetic/*") != 0) {
            check(false, "scratch directory setup");
        }
        RunResult v = run("(cd hermetic && " + qcmp + " verify-paper --workers 2)");
        check(v.exit_code == 0, "verify-paper exits 0 away from the repo");
        check(v.stdout_text.find("VERIFY: 11/11 PASS") != std::string::npos, "verify-paper reports 11/11 PASS");
        size_t pass_lines = 0;
        std::istringstream lines(v.stdout_text);
        std::string line;
        while (std::getline(lines, line)) pass_lines += (line.rfind("PASS", 0) == 0);
        check(pass_lines == 11, "verify-paper prints one line per claim");
    }

    // error surfaces: usage errors exit 2, operation errors exit 1
    {
        check(run(qcmp + " factor").exit_code == 2, "missing required option exits 2");
        check(run(qcmp + " nonsense").exit_code == 2, "unknown subcommand exits 2");
        check(run(qcmp + " factor --m 8").exit_code == 1, "GcdNotOne exits 1");
        check(run(qcmp + " mindist --gm does_not_exist.gm").exit_code == 1, "missing file exits 1");
    }

    std::cout << (g_failures == 0 ? "CLI ROUNDTRIP PASS" : "CLI ROUNDTRIP FAIL") << '\n';
    return g_failures == 0 ? 0 : 1;
}
