#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stree/combinatorics.hpp"
#include "stree/table.hpp"

namespace stree {

enum class CheckStatus { pass, fail, known_discrepancy };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string group;
    std::string item;
    std::string lhs;
    std::string relation;
    std::string rhs;
    CheckStatus status = CheckStatus::pass;
};

struct VerifyOptions {
    /// Replacements for mu / phi; empty means the library versions.
    CountFn mu_fn;
    CountFn phi_fn;
    std::optional<std::filesystem::path> table1;
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    std::size_t failures() const;
    std::size_t known_discrepancies() const;
    bool passed() const { return failures() == 0; }

    /// Columns: group, item, lhs, relation, rhs, status.
    Table to_table() const;
};

struct Table1Cell {
    std::uint32_t sigma = 0;
    std::size_t j = 0;
    BigInt value;
};

/// Reads the published aperiodic-count table, CSV with header sigma,j,value.
std::vector<Table1Cell> load_table1(const std::filesystem::path& path);

/// Compares the published cells with mu. Two discrepancies are known and
/// reported as known_discrepancy: the sigma = 2 row is shifted by one
/// length (cell j holds mu(j+1, 2) for j >= 2), and mu(8, 3) is printed
/// as 648 instead of 6480. Anything else is a failure.
std::vector<CheckResult> check_table1(const std::vector<Table1Cell>& cells,
                                      const CountFn& mu_fn = {});

/// Runs every combinatorial inequality and exhaustive tree identity.
VerifyReport run_verify(const VerifyOptions& options = {});

}  // namespace stree
