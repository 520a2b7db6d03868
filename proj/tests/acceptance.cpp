// Acceptance suite: runs every criterion group and prints one line per
// criterion.  Exit status is nonzero when anything fails.

#include "prymhg/report.hpp"

#include <functional>
#include <iostream>
#include <vector>

using namespace prymhg;

int main() {
    report::VerifyOptions opt;
    struct Group {
        const char* label;
        std::function<std::vector<report::Check>(const report::VerifyOptions&)> run;
    };
    std::vector<Group> groups = {
        {"criterion 01: series and operator annihilation", report::criterion_series},
        {"criterion 02: singular value", report::criterion_singular_value},
        {"criterion 03: exponent reduction and charpoly ratio", report::criterion_exponents},
        {"criterion 04: operator factorization", report::criterion_factorization},
        {"criterion 05: toric system and restriction", report::criterion_gkz},
        {"criterion 06: torus coordinate change", report::criterion_coordinate_change},
        {"criterion 07: conic pipeline", report::criterion_conic},
        {"criterion 08: genera and fixed points", report::criterion_genera},
        {"criterion 09: fiber rank stratification", report::criterion_rank_stratification},
        {"criterion 10: dimension identities", report::criterion_dimensions},
        {"criterion 11: numerical monodromy", report::criterion_monodromy},
        {"criterion 12: finite field counts", report::criterion_finite_fields},
        {"criterion 13: critical fiber witness", report::criterion_critical_fiber},
    };
    bool all_ok = true;
    for (const auto& g : groups) {
        bool ok = true;
        std::string why;
        try {
            std::vector<report::Check> checks = g.run(opt);
            for (const auto& c : checks)
                if (c.status == "fail") {
                    ok = false;
                    why += (why.empty() ? "" : "; ") + c.name +
                           (c.detail.empty() ? "" : " [" + c.detail + "]");
                }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << g.label
                  << (ok || why.empty() ? "" : "  -- " + why) << "\n";
        all_ok = all_ok && ok;
    }
    std::cout << (all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES") << "\n";
    return all_ok ? 0 : 1;
}
