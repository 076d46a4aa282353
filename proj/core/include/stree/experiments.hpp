#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stree/combinatorics.hpp"
#include "stree/enumerate.hpp"
#include "stree/strings.hpp"
#include "stree/table.hpp"

namespace stree {

enum class Mode { exhaustive, montecarlo };

/// uniform: S drawn i.i.d. uniform.
/// prepend: S' of length n-1 drawn uniform, then one uniform symbol
/// prepended, mirroring the "random first character" construction.
enum class GrowthRegime { uniform, prepend };

std::string to_string(Mode m);
std::string to_string(GrowthRegime r);
Mode parse_mode(std::string_view name);
GrowthRegime parse_regime(std::string_view name);

struct ExperimentConfig {
    std::uint32_t sigma = 2;
    std::vector<std::size_t> n_list;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 42;
    Mode mode = Mode::exhaustive;
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;

    /// Throws ConfigError (bad sizes, zero samples, unsorted n_list) or
    /// BudgetError (exhaustive over budget).
    void validate() const;
};

struct ExpectationEstimate {
    std::size_t n = 0;
    std::uint32_t sigma = 0;
    std::string quantity;  // "growth" or "nodes"
    std::string regime;    // growth regime, or "uniform" for nodes
    Mode mode = Mode::exhaustive;
    std::uint64_t samples = 0;
    double mean = 0.0;
    std::optional<Rational> exact_mean;  // exhaustive mode only
    double stderr_mean = 0.0;            // 0 for exhaustive
    double ratio = 0.0;                  // mean/n for growth, mean/n^2 for nodes
};

/// Columns: n, sigma, quantity, regime, mode, samples, mean, mean_exact,
/// stderr, ratio.
Table to_table(const std::vector<ExpectationEstimate>& estimates);

/// Rows (n, k, omega, phi, n_ge_2k, omega_le_phi) for every n in
/// config.n_list and k = 1..n.
Table run_omega(const ExperimentConfig& config);

/// Expected growth for each n in config.n_list and each regime.
std::vector<ExpectationEstimate> run_expected_growth(const ExperimentConfig& config,
                                                     const std::vector<GrowthRegime>& regimes);

/// Exact E[growth(cS')] over the sigma choices of c for a fixed S'.
ExpectationEstimate expected_growth_given(const Str& tail);

/// Expected naive suffix tree node count for each n in config.n_list.
std::vector<ExpectationEstimate> run_expected_size(const ExperimentConfig& config);

}  // namespace stree
