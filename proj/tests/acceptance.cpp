// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.
//
// Golden rows are compared exactly (rank, divisor multiset with
// multiplicity, discriminant sign); the shared property suites run at
// full case counts.

#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "fermatlat/pipeline.hpp"
#include "oracles.hpp"

using fermat::DivisorList;
using fermat::LatticeReport;
using fermat::RunConfig;
using fermat::Target;
using testutil::divs;

namespace {

namespace fs = std::filesystem;

struct GoldenRow {
    int n, d;
    std::size_t rank;
    int sign;
    DivisorList divisors;
};

// Full linear-cycle lattice invariants, desk-scale rows.
const std::vector<GoldenRow> kFullLatticeRows = {
    {2, 3, 7, +1, divs({{1, 7}})},
    {2, 4, 20, -1, divs({{1, 18}, {8, 2}})},
    {2, 5, 37, +1, divs({{1, 26}, {5, 10}, {25, 1}})},
    {2, 6, 62, +1, divs({{1, 37}, {3, 13}, {12, 8}, {36, 3}, {108, 1}})},
    {2, 7, 91, -1, divs({{1, 48}, {7, 38}, {49, 5}})},
    {4, 3, 21, +1, divs({{1, 19}, {3, 1}, {9, 1}})},
};

// Primitive Hodge lattice invariants for the cubic six- and eightfold.
const std::vector<GoldenRow> kHodgeLatticeRows = {
    {6, 3, 70, +1, divs({{1, 54}, {3, 8}, {9, 7}, {27, 1}})},
    {8, 3, 252, -1, divs({{1, 172}, {3, 35}, {9, 34}, {27, 11}})},
};

struct Session {
    fs::path cache_dir;
    std::map<std::pair<int, int>, LatticeReport> full_reports;
    int failures = 0;

    RunConfig cfg(int n, int d, Target target) const {
        RunConfig c;
        c.n = n;
        c.d = d;
        c.target = target;
        c.cache_dir = cache_dir;
        c.quiet = true;
        return c;
    }
};

void run_criterion(Session& s, int id, const std::string& name,
                   const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << name;
    const std::string d = detail.str();
    if (!d.empty()) std::cout << " [" << d << "]";
    std::cout << "\n" << std::flush;
    if (!ok) ++s.failures;
}

bool compare_report(std::ostream& out, const LatticeReport& got, const GoldenRow& want) {
    bool ok = true;
    if (got.rank != want.rank) {
        out << " (" << want.n << "," << want.d << ") rank " << got.rank << " != "
            << want.rank << ";";
        ok = false;
    }
    if (got.divisors != want.divisors) {
        out << " (" << want.n << "," << want.d << ") divisors "
            << fermat::format_discriminant(got) << " differ;";
        ok = false;
    }
    if (got.sign != want.sign) {
        out << " (" << want.n << "," << want.d << ") sign " << got.sign << " != "
            << want.sign << ";";
        ok = false;
    }
    return ok;
}

}  // namespace

int main() {
    Session s;
    s.cache_dir = fs::temp_directory_path() /
                  ("fermatlat-acceptance-" + std::to_string(std::random_device{}()));
    fs::create_directories(s.cache_dir);

    run_criterion(s, 1, "full linear-cycle lattice golden rows", [&](std::ostream& out) {
        bool ok = true;
        for (const auto& row : kFullLatticeRows) {
            const auto r = fermat::run_linear_branch(s.cfg(row.n, row.d, Target::full_linear));
            s.full_reports[{row.n, row.d}] = r;
            ok &= compare_report(out, r, row);
        }
        return ok;
    });

    run_criterion(s, 2, "primitive Hodge lattice golden rows", [&](std::ostream& out) {
        bool ok = true;
        for (const auto& row : kHodgeLatticeRows) {
            const auto r = fermat::run_hodge_branch(s.cfg(row.n, row.d, Target::primitive_hodge));
            ok &= compare_report(out, r, row);
        }
        return ok;
    });

    run_criterion(s, 3, "linear and Hodge divisor lists coincide", [&](std::ostream& out) {
        bool ok = true;
        for (const auto& row : kFullLatticeRows) {
            const auto a1 =
                fermat::run_linear_branch(s.cfg(row.n, row.d, Target::primitive_linear));
            const auto a3 =
                fermat::run_hodge_branch(s.cfg(row.n, row.d, Target::primitive_hodge));
            if (a1.divisors != a3.divisors) {
                out << " (" << row.n << "," << row.d << ") primitive lists differ;";
                ok = false;
            }
        }
        return ok;
    });

    run_criterion(s, 4, "full-to-primitive divisor relation", [&](std::ostream& out) {
        bool ok = true;
        for (const auto& row : kFullLatticeRows) {
            const auto a1 =
                fermat::run_linear_branch(s.cfg(row.n, row.d, Target::primitive_linear));
            if (fermat::table_relation(s.full_reports[{row.n, row.d}].divisors, row.d) !=
                a1.divisors) {
                out << " (" << row.n << "," << row.d << ") relation fails;";
                ok = false;
            }
        }
        return ok;
    });

    run_criterion(s, 5, "cycle counts match the closed formula", [&](std::ostream& out) {
        bool ok = true;
        for (const auto& row : kFullLatticeRows) {
            const fermat::FermatParams p{row.n, row.d};
            const auto enumerated = fermat::enumerate_linear_cycles(p, 100000).size();
            if (fermat::linear_cycle_count(p) != enumerated) {
                out << " (" << row.n << "," << row.d << ") count mismatch;";
                ok = false;
            }
        }
        if (fermat::linear_cycle_count({10, 3}) != 7577955) {
            out << " (10,3) formula value wrong;";
            ok = false;
        }
        return ok;
    });

    run_criterion(s, 6, "mod-p ranks from divisor lists", [&](std::ostream& out) {
        bool ok = true;
        if (fermat::rank_mod_p(s.full_reports[{2, 4}].divisors, 2) != 18) {
            out << " (2,4) mod-2 rank != 18;";
            ok = false;
        }
        if (fermat::rank_mod_p(s.full_reports[{2, 6}].divisors, 3) != 37) {
            out << " (2,6) mod-3 rank != 37;";
            ok = false;
        }
        return ok;
    });

    run_criterion(s, 7, "property suites", [&](std::ostream& out) {
        bool ok = true;
        for (const std::string& failure :
             {testutil::check_smith_properties(1000, 20240817),
              testutil::check_kernel_saturation(1119),
              testutil::check_pham_shape(),
              testutil::check_cyclotomic_float_oracle(1e-9)}) {
            if (!failure.empty()) {
                out << " " << failure << ";";
                ok = false;
            }
        }
        return ok;
    });

    run_criterion(s, 8, "out-of-reach cases refuse cleanly", [&](std::ostream& out) {
        bool ok = true;
        auto expect_refusal = [&](int n, int d) {
            try {
                fermat::run_linear_branch(s.cfg(n, d, Target::full_linear));
                out << " (" << n << "," << d << ") did not refuse;";
                ok = false;
            } catch (const fermat::ResourceCapError& e) {
                const std::string msg = e.what();
                if (msg.find("(n,d)=(" + std::to_string(n) + "," + std::to_string(d) + ")") ==
                    std::string::npos) {
                    out << " refusal does not name (" << n << "," << d << ");";
                    ok = false;
                }
            }
        };
        expect_refusal(4, 6);
        expect_refusal(10, 3);
        return ok;
    });

    fs::remove_all(s.cache_dir);
    if (s.failures == 0) std::cout << "all acceptance criteria passed\n";
    return s.failures;
}
