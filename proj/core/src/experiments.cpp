#include "stree/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "stree/error.hpp"
#include "stree/growth.hpp"
#include "stree/random.hpp"
#include "stree/suffix_tree.hpp"

namespace stree {

std::string to_string(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "montecarlo"; }

std::string to_string(GrowthRegime r) { return r == GrowthRegime::uniform ? "uniform" : "prepend"; }

Mode parse_mode(std::string_view name) {
    if (name == "exhaustive") return Mode::exhaustive;
    if (name == "montecarlo") return Mode::montecarlo;
    throw ConfigError("unknown mode '" + std::string(name) + "' (expected exhaustive or montecarlo)");
}

GrowthRegime parse_regime(std::string_view name) {
    if (name == "uniform") return GrowthRegime::uniform;
    if (name == "prepend") return GrowthRegime::prepend;
    throw ConfigError("unknown regime '" + std::string(name) + "' (expected uniform or prepend)");
}

void ExperimentConfig::validate() const {
    if (sigma < 2) throw ConfigError("experiments require sigma >= 2");
    if (n_list.empty()) throw ConfigError("no string lengths given");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] == 0) throw ConfigError("string lengths must be >= 1");
        if (i > 0 && n_list[i] < n_list[i - 1]) throw ConfigError("n_list must be sorted ascending");
    }
    if (workers == 0) throw ConfigError("workers must be >= 1");
    if (mode == Mode::montecarlo && samples == 0) throw ConfigError("montecarlo requires samples >= 1");
    if (mode == Mode::exhaustive) {
        for (std::size_t n : n_list) require_budget(n, sigma, budget);
    }
}

namespace {

// stream tags keep the regimes on disjoint random streams
constexpr std::uint64_t kTagUniformGrowth = 1;
constexpr std::uint64_t kTagPrependGrowth = 2;
constexpr std::uint64_t kTagNodes = 3;

struct Moments {
    std::uint64_t count = 0;
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;

    void add(std::uint64_t x) {
        ++count;
        sum += x;
        sum_sq += x * x;
    }

    void merge(const Moments& o) {
        count += o.count;
        sum += o.sum;
        sum_sq += o.sum_sq;
    }
};

/// Runs sample(i) for i in [0, total) across workers and merges the
/// integer moments, so the result does not depend on the worker count.
template <class Sample>
Moments collect(std::uint64_t total, unsigned workers, Sample&& sample) {
    auto ranges = partition_ranges(total, workers);
    std::vector<Moments> partial(ranges.size());
    parallel_ranges(total, workers, [&](std::size_t part, std::uint64_t first, std::uint64_t last) {
        Moments m;
        for (std::uint64_t i = first; i < last; ++i) m.add(sample(i));
        partial[part] = m;
    });
    Moments all;
    for (const auto& m : partial) all.merge(m);
    return all;
}

/// Like collect(), but over every string of length n in lexicographic order.
template <class Visit>
Moments collect_exhaustive(std::size_t n, std::uint32_t sigma, std::uint64_t total,
                           unsigned workers, Visit&& visit) {
    auto ranges = partition_ranges(total, workers);
    std::vector<Moments> partial(ranges.size());
    parallel_ranges(total, workers, [&](std::size_t part, std::uint64_t first, std::uint64_t last) {
        Moments m;
        for_each_string(n, sigma, first, last, [&](std::span<const Symbol> s) { visit(s, m); });
        partial[part] = m;
    });
    Moments all;
    for (const auto& m : partial) all.merge(m);
    return all;
}

ExpectationEstimate summarize(std::size_t n, std::uint32_t sigma, std::string quantity,
                              std::string regime, Mode mode, const Moments& m) {
    ExpectationEstimate e;
    e.n = n;
    e.sigma = sigma;
    e.quantity = std::move(quantity);
    e.regime = std::move(regime);
    e.mode = mode;
    e.samples = m.count;

    Rational mean(BigInt(m.sum), BigInt(m.count));
    e.mean = static_cast<double>(mean);
    if (mode == Mode::exhaustive) {
        e.exact_mean = mean;
    } else if (m.count > 1) {
        Rational var = (Rational(BigInt(m.sum_sq)) - Rational(BigInt(m.sum)) * mean) /
                       Rational(BigInt(m.count - 1));
        e.stderr_mean = std::sqrt(static_cast<double>(var) / static_cast<double>(m.count));
    }
    const double scale = static_cast<double>(n);
    e.ratio = e.quantity == "nodes" ? e.mean / (scale * scale) : e.mean / scale;
    return e;
}

std::uint64_t growth_with_prefix(Symbol first, std::span<const Symbol> tail,
                                 std::vector<Symbol>& buf) {
    buf.clear();
    buf.push_back(first);
    buf.insert(buf.end(), tail.begin(), tail.end());
    return growth_oracle(std::span<const Symbol>(buf));
}

}  // namespace

Table to_table(const std::vector<ExpectationEstimate>& estimates) {
    Table t({{"n", ColumnKind::integer},
             {"sigma", ColumnKind::integer},
             {"quantity", ColumnKind::text},
             {"regime", ColumnKind::text},
             {"mode", ColumnKind::text},
             {"samples", ColumnKind::integer},
             {"mean", ColumnKind::real},
             {"mean_exact", ColumnKind::text},
             {"stderr", ColumnKind::real},
             {"ratio", ColumnKind::real}});
    for (const auto& e : estimates) {
        std::string exact;
        if (e.exact_mean) {
            exact = numerator(*e.exact_mean).str() + "/" + denominator(*e.exact_mean).str();
        }
        t.add_row({std::to_string(e.n), std::to_string(e.sigma), e.quantity, e.regime,
                   to_string(e.mode), std::to_string(e.samples), format_real(e.mean), exact,
                   format_real(e.stderr_mean), format_real(e.ratio)});
    }
    return t;
}

Table run_omega(const ExperimentConfig& config) {
    ExperimentConfig exhaustive = config;
    exhaustive.mode = Mode::exhaustive;
    exhaustive.validate();

    Table t({{"n", ColumnKind::integer},
             {"k", ColumnKind::integer},
             {"omega", ColumnKind::big_integer},
             {"phi", ColumnKind::big_integer},
             {"n_ge_2k", ColumnKind::boolean},
             {"omega_le_phi", ColumnKind::boolean}});
    for (std::size_t n : config.n_list) {
        auto counts = omega_distribution(n, config.sigma, config.budget, config.workers);
        for (std::size_t k = 1; k <= n; ++k) {
            BigInt bound = phi(k, config.sigma).value;
            BigInt omega = counts[k];
            t.add_row({std::to_string(n), std::to_string(k), omega.str(), bound.str(),
                       format_bool(n >= 2 * k), format_bool(omega <= bound)});
        }
    }
    return t;
}

std::vector<ExpectationEstimate> run_expected_growth(const ExperimentConfig& config,
                                                     const std::vector<GrowthRegime>& regimes) {
    config.validate();
    const std::uint32_t sigma = config.sigma;
    const Alphabet alphabet(sigma);
    std::vector<ExpectationEstimate> out;

    for (std::size_t n : config.n_list) {
        for (GrowthRegime regime : regimes) {
            Moments m;
            if (config.mode == Mode::exhaustive && regime == GrowthRegime::uniform) {
                m = collect_exhaustive(n, sigma, string_space_size(n, sigma), config.workers,
                                       [](std::span<const Symbol> s, Moments& acc) {
                                           acc.add(growth_oracle(s));
                                       });
            } else if (config.mode == Mode::exhaustive) {
                // every tail S' of length n-1, every first symbol
                m = collect_exhaustive(n - 1, sigma, string_space_size(n - 1, sigma),
                                       config.workers,
                                       [sigma](std::span<const Symbol> tail, Moments& acc) {
                                           std::vector<Symbol> buf;
                                           for (Symbol c = 1; c <= sigma; ++c) {
                                               acc.add(growth_with_prefix(c, tail, buf));
                                           }
                                       });
            } else if (regime == GrowthRegime::uniform) {
                m = collect(config.samples, config.workers, [&](std::uint64_t i) -> std::uint64_t {
                    SplitMix64 rng(derive_seed(config.seed, {kTagUniformGrowth, n, i}));
                    return growth_oracle(random_string(n, alphabet, rng)).value;
                });
            } else {
                m = collect(config.samples, config.workers, [&](std::uint64_t i) -> std::uint64_t {
                    SplitMix64 rng(derive_seed(config.seed, {kTagPrependGrowth, n, i}));
                    std::vector<Symbol> tail;
                    if (n > 1) {
                        Str s = random_string(n - 1, alphabet, rng);
                        tail.assign(s.symbols().begin(), s.symbols().end());
                    }
                    auto first = static_cast<Symbol>(rng.below(sigma)) + 1;
                    std::vector<Symbol> buf;
                    return growth_with_prefix(first, tail, buf);
                });
            }
            out.push_back(summarize(n, sigma, "growth", to_string(regime), config.mode, m));
        }
    }
    return out;
}

ExpectationEstimate expected_growth_given(const Str& tail) {
    const std::uint32_t sigma = tail.alphabet().size();
    if (sigma < 2) throw ConfigError("experiments require sigma >= 2");
    Moments m;
    std::vector<Symbol> buf;
    for (Symbol c = 1; c <= sigma; ++c) m.add(growth_with_prefix(c, tail.symbols(), buf));
    auto e = summarize(tail.size() + 1, sigma, "growth", "given", Mode::exhaustive, m);
    return e;
}

std::vector<ExpectationEstimate> run_expected_size(const ExperimentConfig& config) {
    config.validate();
    const Alphabet alphabet(config.sigma);
    std::vector<ExpectationEstimate> out;
    for (std::size_t n : config.n_list) {
        Moments m;
        if (config.mode == Mode::exhaustive) {
            m = collect_exhaustive(n, config.sigma, string_space_size(n, config.sigma),
                                   config.workers, [&](std::span<const Symbol> s, Moments& acc) {
                                       acc.add(node_count(build_naive(make_string(s, alphabet))));
                                   });
        } else {
            m = collect(config.samples, config.workers, [&](std::uint64_t i) -> std::uint64_t {
                SplitMix64 rng(derive_seed(config.seed, {kTagNodes, n, i}));
                return node_count(build_naive(random_string(n, alphabet, rng)));
            });
        }
        out.push_back(summarize(n, config.sigma, "nodes", "uniform", config.mode, m));
    }
    return out;
}

}  // namespace stree
