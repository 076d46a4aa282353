#include "stree/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "stree/error.hpp"
#include "stree/growth.hpp"
#include "stree/strings.hpp"

namespace stree {
namespace {

class MuCache {
public:
    std::optional<BigInt> find(std::uint32_t sigma, std::size_t j) {
        std::lock_guard lock(mutex_);
        auto it = values_.find({sigma, j});
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    void store(std::uint32_t sigma, std::size_t j, const BigInt& v) {
        std::lock_guard lock(mutex_);
        values_.emplace(std::pair{sigma, j}, v);
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::uint32_t, std::size_t>, BigInt> values_;
};

MuCache& mu_cache() {
    static MuCache cache;
    return cache;
}

void require_sigma(std::uint32_t sigma, std::uint32_t minimum) {
    if (sigma < minimum) {
        throw DomainError("alphabet size " + std::to_string(sigma) + " below minimum " +
                          std::to_string(minimum));
    }
}

}  // namespace

BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
    BigInt result = 1;
    BigInt b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

BigInt mu(std::size_t j, std::uint32_t sigma) {
    if (j == 0) throw DomainError("mu requires j >= 1");
    require_sigma(sigma, 1);
    if (auto hit = mu_cache().find(sigma, j)) return *hit;

    BigInt value = ipow(sigma, j);
    for (std::size_t d = 1; d < j; ++d) {
        if (j % d == 0) value -= mu(d, sigma);
    }
    mu_cache().store(sigma, j, value);
    return value;
}

BigInt mu_prime_power(std::uint64_t p, std::uint32_t t, std::uint32_t sigma) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (t == 0) throw DomainError("mu_prime_power requires t >= 1");
    require_sigma(sigma, 1);
    std::uint64_t lower = 1;
    for (std::uint32_t i = 1; i < t; ++i) lower *= p;
    return ipow(sigma, lower * p) - ipow(sigma, lower);
}

BigInt PhiBound::cap() const { return BigInt(k) * ipow(sigma, k); }

BigInt phi_with(std::size_t k, std::uint32_t sigma, const CountFn& mu_fn) {
    if (k == 0) throw DomainError("phi requires k >= 1");
    require_sigma(sigma, 2);
    BigInt sum = mu_fn(k, sigma);
    for (std::size_t j = 1; j < k; ++j) {
        sum += mu_fn(j, sigma) * (sigma - 1) * ipow(sigma, k - j - 1);
    }
    return sum;
}

PhiBound phi(std::size_t k, std::uint32_t sigma) {
    return PhiBound{k, sigma, phi_with(k, sigma, [](std::size_t j, std::uint32_t s) { return mu(j, s); })};
}

BigInt phi_prefix_sum(std::size_t m, std::uint32_t sigma) {
    if (m == 0) throw DomainError("phi_prefix_sum requires m >= 1");
    BigInt sum = 0;
    for (std::size_t k = 1; k <= m; ++k) sum += phi(k, sigma).value;
    return sum;
}

BigInt phi_prefix_cap(std::size_t m, std::uint32_t sigma) {
    return BigInt(m + 1) * ipow(sigma, m + 1);
}

std::vector<std::uint64_t> omega_distribution(std::size_t n, std::uint32_t sigma,
                                              std::uint64_t budget, unsigned workers) {
    if (n == 0) throw DomainError("omega requires n >= 1");
    require_sigma(sigma, 1);
    const std::uint64_t total = require_budget(n, sigma, budget);

    auto ranges = partition_ranges(total, workers);
    std::vector<std::vector<std::uint64_t>> partial(ranges.size(),
                                                    std::vector<std::uint64_t>(n + 1, 0));
    parallel_ranges(total, workers, [&](std::size_t part, std::uint64_t first, std::uint64_t last) {
        auto& counts = partial[part];
        for_each_string(n, sigma, first, last,
                        [&](std::span<const Symbol> s) { ++counts[growth_oracle(s)]; });
    });

    std::vector<std::uint64_t> counts(n + 1, 0);
    for (const auto& p : partial) {
        for (std::size_t k = 0; k <= n; ++k) counts[k] += p[k];
    }
    return counts;
}

BigInt omega_bruteforce(std::size_t n, std::size_t k, std::uint32_t sigma, std::uint64_t budget,
                        unsigned workers) {
    if (k < 1 || k > n) {
        throw DomainError("omega requires 1 <= k <= n, got k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
    }
    return omega_distribution(n, sigma, budget, workers)[k];
}

BigInt count_aperiodic_bruteforce(std::size_t j, std::uint32_t sigma, std::uint64_t budget,
                                  unsigned workers) {
    if (j == 0) throw DomainError("count_aperiodic_bruteforce requires j >= 1");
    const std::uint64_t total = require_budget(j, sigma, budget);
    std::atomic<std::uint64_t> count{0};
    parallel_ranges(total, workers, [&](std::size_t, std::uint64_t first, std::uint64_t last) {
        std::uint64_t local = 0;
        for_each_string(j, sigma, first, last, [&](std::span<const Symbol> s) {
            if (is_aperiodic(s)) ++local;
        });
        count += local;
    });
    return BigInt(count.load());
}

bool Theorem1Report::all_hold() const {
    for (const auto& r : rows) {
        if (!r.holds()) return false;
    }
    return true;
}

Theorem1Report verify_theorem1(std::uint32_t sigma, std::size_t k_max, std::size_t n_max,
                               std::uint64_t budget, unsigned workers, const CountFn& phi_fn) {
    Theorem1Report report;
    report.sigma = sigma;
    for (std::size_t n = 2; n <= n_max; ++n) {
        const std::size_t k_top = std::min(k_max, n / 2);
        if (k_top == 0) continue;
        auto counts = omega_distribution(n, sigma, budget, workers);
        for (std::size_t k = 1; k <= k_top; ++k) {
            BigInt bound = phi_fn ? phi_fn(k, sigma) : phi(k, sigma).value;
            report.rows.push_back(Theorem1Row{n, k, BigInt(counts[k]), std::move(bound)});
        }
    }
    return report;
}

std::string to_string(Quantity q) {
    switch (q) {
        case Quantity::mu: return "mu";
        case Quantity::phi: return "phi";
        case Quantity::omega: return "omega";
    }
    return "?";
}

void CountTable::set(CountKey key, BigInt value) {
    if (value < 0) throw DomainError("counts are non-negative");
    entries_[key] = std::move(value);
}

const BigInt& CountTable::at(CountKey key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        throw RangeError("no " + to_string(quantity_) + " entry for index " +
                         std::to_string(key.index));
    }
    return it->second;
}

Table count_table_schema() {
    return Table({{"sigma", ColumnKind::integer},
                  {"j_or_n", ColumnKind::integer},
                  {"k", ColumnKind::integer},
                  {"value", ColumnKind::big_integer}});
}

Table CountTable::to_table() const {
    Table t = count_table_schema();
    for (const auto& [key, value] : entries_) {
        t.add_row({std::to_string(sigma_), std::to_string(key.index),
                   quantity_ == Quantity::omega ? std::to_string(key.k) : std::string(),
                   value.str()});
    }
    return t;
}

namespace {

std::size_t parse_size(const std::string& cell, const char* what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(cell, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (cell.empty() || pos != cell.size()) {
        throw ConfigError(std::string("bad ") + what + " cell '" + cell + "'");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

CountTable CountTable::from_table(Quantity quantity, const Table& table) {
    if (table.columns() != count_table_schema().columns()) {
        throw ConfigError("count table header must be sigma,j_or_n,k,value");
    }
    std::optional<CountTable> out;
    for (const auto& row : table.rows()) {
        auto sigma = static_cast<std::uint32_t>(parse_size(row[0], "sigma"));
        if (!out) out.emplace(quantity, sigma);
        if (out->sigma() != sigma) throw ConfigError("count table mixes alphabet sizes");
        CountKey key{parse_size(row[1], "j_or_n"),
                     quantity == Quantity::omega ? parse_size(row[2], "k") : 0};
        BigInt value;
        try {
            value = BigInt(row[3]);
        } catch (const std::exception&) {
            throw ConfigError("bad value cell '" + row[3] + "'");
        }
        out->set(key, std::move(value));
    }
    if (!out) throw ConfigError("count table is empty");
    return std::move(*out);
}

CountTable mu_table(std::uint32_t sigma, std::size_t max_j) {
    CountTable t(Quantity::mu, sigma);
    for (std::size_t j = 1; j <= max_j; ++j) t.set({j, 0}, mu(j, sigma));
    return t;
}

CountTable phi_table(std::uint32_t sigma, std::size_t max_k) {
    CountTable t(Quantity::phi, sigma);
    for (std::size_t k = 1; k <= max_k; ++k) t.set({k, 0}, phi(k, sigma).value);
    return t;
}

CountTable omega_table(std::uint32_t sigma, std::size_t n, std::uint64_t budget,
                       unsigned workers) {
    CountTable t(Quantity::omega, sigma);
    auto counts = omega_distribution(n, sigma, budget, workers);
    for (std::size_t k = 1; k <= n; ++k) t.set({n, k}, BigInt(counts[k]));
    return t;
}

}  // namespace stree
