#pragma once

#include "prymhg/exact.hpp"

#include <string>
#include <vector>

namespace prymhg::report {

struct Check {
    std::string name;
    std::string anchor;  // stable identifier of the mathematical claim
    std::string status;  // pass | fail | skipped
    std::string detail;
};

struct VerifyOptions {
    unsigned bits = 192;
    Rat tolerance = Rat(1, 100000000);
    unsigned seed = 20240817;
    long budget = 10000000L;
    bool with_monodromy = true;
    bool with_counts = true;
};

// the full acceptance ledger; every criterion contributes pass/fail checks
std::vector<Check> verify_all(const VerifyOptions& opt);

std::vector<Check> criterion_series(const VerifyOptions&);
std::vector<Check> criterion_singular_value(const VerifyOptions&);
std::vector<Check> criterion_exponents(const VerifyOptions&);
std::vector<Check> criterion_factorization(const VerifyOptions&);
std::vector<Check> criterion_gkz(const VerifyOptions&);
std::vector<Check> criterion_coordinate_change(const VerifyOptions&);
std::vector<Check> criterion_conic(const VerifyOptions&);
std::vector<Check> criterion_genera(const VerifyOptions&);
std::vector<Check> criterion_rank_stratification(const VerifyOptions&);
std::vector<Check> criterion_dimensions(const VerifyOptions&);
std::vector<Check> criterion_monodromy(const VerifyOptions&);
std::vector<Check> criterion_finite_fields(const VerifyOptions&);
std::vector<Check> criterion_critical_fiber(const VerifyOptions&);

bool all_pass(const std::vector<Check>& checks);
std::string checks_json(const std::vector<Check>& checks);

}  // namespace prymhg::report
