#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "domchrom/solver.hpp"

namespace domchrom {

inline constexpr int kReportVersion = 1;

// A campaign's output: parameters, one record per instance in instance-id
// order, and a summary. Serialization is deterministic, so equal campaigns
// produce byte-identical files.
struct Report {
    std::string campaign;
    nlohmann::json params = nlohmann::json::object();
    std::vector<nlohmann::json> records;
    nlohmann::json summary = nlohmann::json::object();

    std::size_t counterexample_count() const;
    bool holds() const { return counterexample_count() == 0; }
};

std::string to_json_text(const Report& report);
std::string to_csv_text(const Report& report);
Report report_from_json(const nlohmann::json& j);

struct CampaignOptions {
    int jobs = 1;
    SolveOptions solve;
};

// Resolves the default worker count from DOMCHROM_JOBS (1 when unset).
int default_jobs();

// chi(T) = chi(T reversed) over every orientation of every free tree with
// n <= max_n. Mask m and its complement are solved in the same record.
// 1 <= max_n <= 10.
Report check_reversal_invariance(int max_n, const CampaignOptions& opts = {});

// Every (tree, orientation, underlying leaf) with 2 <= n <= max_n:
// delta = chi(T) - chi(T - v) must lie in {0, 1}; delta = 1 must coincide
// with "v is the sole out-neighbor of its neighbor u, or the unique source";
// delta = 1 with v a source requires in-degree(u) = 1. max_n <= 9.
Report check_leaf_deletion(int max_n, const CampaignOptions& opts = {});

// Exact min/max over all orientations of GS_m^k with witnesses, compared to
// the conjectured values. Disagreements are findings, not counterexamples.
Report explore_conjecture_gs(int m_max, int k_max, int n_cap, const CampaignOptions& opts = {});

// All 2^m orientations of each star with m <= m_max: chi in {2, 3}, and 2
// exactly on the two uniform orientations. m_max <= 10.
Report check_star_proposition(int m_max, const CampaignOptions& opts = {});

struct CaterpillarSampling {
    int sample_count = 200;
    std::uint64_t seed = 1;
    int spine_min = 3;
    int spine_max = 8;
    int max_n = 12;
};

// Random oriented caterpillars: spine lower bound, 2m - 1 upper bound,
// constructive colorings, and directed-spine equality.
Report check_caterpillar_bounds(const CaterpillarSampling& sampling,
                                const CampaignOptions& opts = {});

// Minimum over all orientations of P_n against the closed form, for
// n_min <= n <= n_max <= 26.
Report check_path_orientations(int n_min, int n_max, const CampaignOptions& opts = {});

// Every free tree with n <= max_n rooted at every vertex, both senses:
// solver value against n - l + 1. max_n <= 12.
Report check_rooted_formula(int max_n, const CampaignOptions& opts = {});

// solve_exact against brute_force_chi on every orientation of every free tree
// with n <= max_n. max_n <= 10.
Report check_oracle_equivalence(int max_n, const CampaignOptions& opts = {});

// Re-verifies every certificate embedded in a report against its instance
// encoding. Returns the number of certificates that failed.
std::size_t revalidate_certificates(const Report& report);

} // namespace domchrom
