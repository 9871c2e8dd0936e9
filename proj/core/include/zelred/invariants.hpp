#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zelred {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::int64_t cases = 0;
    std::string detail;
    double seconds = 0.0;  // wall time; excluded from deterministic reports
};

struct CheckGrid {
    std::vector<int> ms{2, 3, 5};
    std::vector<int> ells{2, 3, 5};
    int s_max = 12;
    int level_s_max = 20;
    std::vector<int> disjoint_ms{2, 3};
    std::vector<int> disjoint_ells{3, 5};
    int disjoint_s_max = 8;
    int involution_eps_max = 12;
    int involution_s_max = 60;
    int classical_pair_max = 6;
    int hook_d_max = 8;
    int elliptic_s_max = 6;

    // ZELRED_CHECK_GRID=<s_max> overrides s_max when set to a positive integer.
    static CheckGrid from_env();
};

// Acceptance criteria 1 to 9; criterion 10 needs two processes and lives with the callers.
CheckResult criterion_count_law(const CheckGrid& grid);
CheckResult criterion_digit_index_equivalence(const CheckGrid& grid);
CheckResult criterion_small_s_degeneration(const CheckGrid& grid);
CheckResult criterion_involution_conservation(const CheckGrid& grid);
CheckResult criterion_jacquet_closure(const CheckGrid& grid);
CheckResult criterion_graph_shape(const CheckGrid& grid);
CheckResult criterion_euler_identity(const CheckGrid& grid);
CheckResult criterion_disjointness(const CheckGrid& grid);
CheckResult criterion_classical_oracle(const CheckGrid& grid);

std::vector<CheckResult> acceptance_criteria(const CheckGrid& grid);

// Every module invariant, criteria included.
std::vector<CheckResult> run_invariant_suite(const CheckGrid& grid);

// Deterministic JSON report without timings.
std::string report_json(const std::vector<CheckResult>& results);

}  // namespace zelred
