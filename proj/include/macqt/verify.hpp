// Machine-checked identity suites. Every identity the engine is built
// on is re-derived here from independent routes and compared exactly;
// the CLI verify command and the acceptance runner both drive these.
#pragma once

#include <string>
#include <vector>

#include "macqt/qalgebra.hpp"

namespace macqt {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail; // first counterexample, when failing
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Suite names accepted by run_suite (and "all").
const std::vector<std::string>& verify_suite_names();

/// Run one suite with partition sizes capped at max_n; parameters the
/// identities fix structurally (bracket heights, word lengths) keep
/// their own caps.
SuiteReport run_suite(const std::string& name, int max_n);

/// "all" or a single suite name.
std::vector<SuiteReport> run_suites(const std::string& which, int max_n);

// granular checks, exposed for the acceptance runner
CheckResult check_raw_vs_cancelled(int max_size);
CheckResult check_duality(int max_size);
CheckResult check_corner_identities(int max_size);
CheckResult check_sum_rules(int max_size, int max_k);
CheckResult check_eigen_commutator(int max_size, int max_k);
CheckResult check_eigen_commutes_with_d0(int max_size, int max_m);
CheckResult check_axis_eigen_vs_bracket(int max_size, int max_m);
CheckResult check_en_over_m_expansion(int max_n);
CheckResult check_antidiagonal_family(int max_size, int max_m);
CheckResult check_mixed_dd_star(int max_size, int max_sum);
CheckResult check_lower_ladder(int max_size, int max_k);
CheckResult check_one_cell_ladder(int max_size, int max_a);
CheckResult check_dk_ladder_rows(int max_size);
CheckResult check_nabla_rows(int max_size);
CheckResult check_d_commutator_recursion(int max_size, int max_k);
CheckResult check_down_involutions(int max_size);
CheckResult check_star_via_hall(int max_size);
CheckResult check_omega_multiplicative(int max_deg);
CheckResult check_tableau_entries(int max_n);
CheckResult check_tableau_skew(int max_n);
CheckResult check_word_adjoint_routes(int max_n, int max_exp);
CheckResult check_table_polynomiality(int max_n);
CheckResult check_bridge(int max_k, int max_n);
CheckResult check_oracle_equivalence(int max_n);
CheckResult check_star_orthogonality(int max_n);
CheckResult check_hbasis_round_trip(int max_n);
CheckResult check_splitting_choices(int max_deg);
CheckResult check_diagonal_vs_bracket(int max_deg);
CheckResult check_conjugation_shift(int max_deg);
CheckResult check_symbol_vs_word(int max_mn);
CheckResult check_tableau_const_vs_word(int max_m, int max_n);

} // namespace macqt
