#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stree/enumerate.hpp"
#include "stree/table.hpp"

namespace stree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Signature shared by mu and the phi value, used to inject
/// alternative (or deliberately broken) implementations into checkers.
using CountFn = std::function<BigInt(std::size_t, std::uint32_t)>;

BigInt ipow(std::uint64_t base, std::uint64_t exponent);

bool is_prime(std::uint64_t p) noexcept;

/// Number of aperiodic strings of length j over sigma symbols:
///   mu(j) = sigma^j - sum over proper divisors d of j of mu(d).
/// Memoized in a process-wide cache; safe to call concurrently.
BigInt mu(std::size_t j, std::uint32_t sigma);

/// sigma^(p^t) - sigma^(p^(t-1)). Throws DomainError if p is not prime
/// or t = 0.
BigInt mu_prime_power(std::uint64_t p, std::uint32_t t, std::uint32_t sigma);

/// Upper bound on the number of length-n strings with growth k, valid
/// for n >= 2k.
struct PhiBound {
    std::size_t k = 0;
    std::uint32_t sigma = 0;
    BigInt value;

    /// k * sigma^k
    BigInt cap() const;
    bool within_cap() const { return value <= cap(); }
};

/// phi(k) = sum_{j=1}^{k-1} mu(j) (sigma-1) sigma^(k-j-1) + mu(k).
/// Requires k >= 1 and sigma >= 2.
PhiBound phi(std::size_t k, std::uint32_t sigma);

/// Same sum with a caller-provided mu; used by mutation tests.
BigInt phi_with(std::size_t k, std::uint32_t sigma, const CountFn& mu_fn);

/// sum_{k=1}^m phi(k, sigma)
BigInt phi_prefix_sum(std::size_t m, std::uint32_t sigma);

/// (m+1) sigma^(m+1), the closed-form cap on phi_prefix_sum.
BigInt phi_prefix_cap(std::size_t m, std::uint32_t sigma);

/// Exhaustive growth histogram: result[k] = Omega(n, k, sigma) for
/// 1 <= k <= n; result[0] is always 0. Enumerates all sigma^n strings
/// split into `workers` disjoint lexicographic ranges.
std::vector<std::uint64_t> omega_distribution(std::size_t n, std::uint32_t sigma,
                                              std::uint64_t budget = kDefaultBudget,
                                              unsigned workers = 1);

BigInt omega_bruteforce(std::size_t n, std::size_t k, std::uint32_t sigma,
                        std::uint64_t budget = kDefaultBudget, unsigned workers = 1);

/// Counts aperiodic strings of length j by enumerating them all.
BigInt count_aperiodic_bruteforce(std::size_t j, std::uint32_t sigma,
                                  std::uint64_t budget = kDefaultBudget, unsigned workers = 1);

struct Theorem1Row {
    std::size_t n = 0;
    std::size_t k = 0;
    BigInt omega;
    BigInt phi;

    bool holds() const { return omega <= phi; }
};

struct Theorem1Report {
    std::uint32_t sigma = 0;
    std::vector<Theorem1Row> rows;

    bool all_hold() const;
};

/// Checks Omega(n,k) <= phi(k) for every k <= k_max and 2k <= n <= n_max.
/// A violated inequality shows up as a row with holds() == false.
Theorem1Report verify_theorem1(std::uint32_t sigma, std::size_t k_max, std::size_t n_max,
                               std::uint64_t budget = kDefaultBudget, unsigned workers = 1,
                               const CountFn& phi_fn = {});

enum class Quantity { mu, phi, omega };

std::string to_string(Quantity q);

struct CountKey {
    std::size_t index = 0;  // j for mu, k for phi, n for omega
    std::size_t k = 0;      // growth k for omega, 0 otherwise

    friend auto operator<=>(const CountKey&, const CountKey&) = default;
};

/// Exact counts for one quantity and one alphabet size.
class CountTable {
public:
    CountTable(Quantity quantity, std::uint32_t sigma) : quantity_(quantity), sigma_(sigma) {}

    Quantity quantity() const noexcept { return quantity_; }
    std::uint32_t sigma() const noexcept { return sigma_; }
    const std::map<CountKey, BigInt>& entries() const noexcept { return entries_; }

    /// Throws DomainError for negative counts.
    void set(CountKey key, BigInt value);
    const BigInt& at(CountKey key) const;

    /// Columns: sigma, j_or_n, k, value. k is empty for mu and phi.
    Table to_table() const;
    static CountTable from_table(Quantity quantity, const Table& table);

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    Quantity quantity_;
    std::uint32_t sigma_;
    std::map<CountKey, BigInt> entries_;
};

Table count_table_schema();

CountTable mu_table(std::uint32_t sigma, std::size_t max_j);
CountTable phi_table(std::uint32_t sigma, std::size_t max_k);
CountTable omega_table(std::uint32_t sigma, std::size_t n, std::uint64_t budget = kDefaultBudget,
                       unsigned workers = 1);

}  // namespace stree
