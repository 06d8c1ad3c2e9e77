#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "su11/pipeline.hpp"

namespace su11 {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct ValidationOptions {
    std::uint64_t seed = 20241017;
    std::size_t configs_per_channel = 500;
    std::size_t structural_draws = 1000;
    std::size_t oracle_configs = 6;
    std::size_t fock_cutoff = 25;
};

/// Uniform draw over r ∈ [0, 2], θ ∈ [0, π/2], all phases in [0, 2π) and
/// log-uniform N̄ ∈ [10, 10⁶] subject to N̄ > 2 sinh² r.
InterferometerConfig random_config(ChannelKind kind, std::mt19937_64& rng);

CriterionResult check_closed_form_equivalence(const ValidationOptions& options);
CriterionResult check_limit_chain(const ValidationOptions& options);
CriterionResult check_scheme_numbers(const ValidationOptions& options);
CriterionResult check_max_tritter_angle(const ValidationOptions& options);
CriterionResult check_turning_points(const ValidationOptions& options);
CriterionResult check_measurement_optimality(const ValidationOptions& options);
CriterionResult check_fock_oracle(const ValidationOptions& options);
CriterionResult check_structure(const ValidationOptions& options);

/// Runs the listed criteria (1-8) in order.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const ValidationOptions& options = {});

/// "PASS <id> <name>: <detail> (<seconds> s)"
std::string format_result(const CriterionResult& result);

}  // namespace su11
