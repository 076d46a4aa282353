#include "stree/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "stree/error.hpp"
#include "stree/growth.hpp"
#include "stree/suffix_tree.hpp"

namespace stree {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::known_discrepancy: return "known_discrepancy";
    }
    return "?";
}

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) {
        return c.status == CheckStatus::fail;
    }));
}

std::size_t VerifyReport::known_discrepancies() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) {
        return c.status == CheckStatus::known_discrepancy;
    }));
}

Table VerifyReport::to_table() const {
    Table t({{"group", ColumnKind::text},
             {"item", ColumnKind::text},
             {"lhs", ColumnKind::big_integer},
             {"relation", ColumnKind::text},
             {"rhs", ColumnKind::big_integer},
             {"status", ColumnKind::text}});
    for (const auto& c : checks) t.add_row({c.group, c.item, c.lhs, c.relation, c.rhs, to_string(c.status)});
    return t;
}

std::vector<Table1Cell> load_table1(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    Table t = Table::from_csv(buf.str(), {{"sigma", ColumnKind::integer},
                                          {"j", ColumnKind::integer},
                                          {"value", ColumnKind::big_integer}});
    std::vector<Table1Cell> cells;
    for (const auto& row : t.rows()) {
        try {
            cells.push_back(Table1Cell{static_cast<std::uint32_t>(std::stoul(row[0])),
                                       static_cast<std::size_t>(std::stoul(row[1])), BigInt(row[2])});
        } catch (const std::exception&) {
            throw ConfigError("malformed row in " + path.string());
        }
    }
    return cells;
}

namespace {

CheckResult compare(std::string group, std::string item, const BigInt& lhs, const char* relation,
                    const BigInt& rhs) {
    const std::string rel = relation;
    bool ok = false;
    if (rel == "==") ok = lhs == rhs;
    else if (rel == "<=") ok = lhs <= rhs;
    else if (rel == ">=") ok = lhs >= rhs;
    return CheckResult{std::move(group), std::move(item), lhs.str(), rel, rhs.str(),
                       ok ? CheckStatus::pass : CheckStatus::fail};
}

std::string args(std::initializer_list<std::pair<const char*, std::size_t>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ' ';
        out += k;
        out += '=';
        out += std::to_string(v);
    }
    return out;
}

// Published cells that disagree with the recurrence.
constexpr std::uint32_t kShiftedRowSigma = 2;
struct KnownTypo {
    std::uint32_t sigma;
    std::size_t j;
    unsigned published;
};
constexpr KnownTypo kKnownTypos[] = {{3, 8, 648}};

}  // namespace

std::vector<CheckResult> check_table1(const std::vector<Table1Cell>& cells, const CountFn& mu_fn) {
    CountFn mu_of = mu_fn ? mu_fn : CountFn([](std::size_t j, std::uint32_t s) { return mu(j, s); });
    std::map<std::uint32_t, std::vector<const Table1Cell*>> rows;
    for (const auto& c : cells) rows[c.sigma].push_back(&c);

    std::vector<CheckResult> out;
    for (auto& [sigma, row] : rows) {
        std::sort(row.begin(), row.end(), [](auto* a, auto* b) { return a->j < b->j; });

        bool all_match = true;
        bool shifted = true;
        for (const auto* c : row) {
            all_match = all_match && c->value == mu_of(c->j, sigma);
            const std::size_t expected_j = c->j == 1 ? 1 : c->j + 1;
            shifted = shifted && c->value == mu_of(expected_j, sigma);
        }
        if (!all_match && shifted && sigma == kShiftedRowSigma) {
            out.push_back({"table1", "sigma=" + std::to_string(sigma) + " row",
                           "published mu(j) for j=1.." + std::to_string(row.back()->j),
                           "shifted", "recurrence mu(1),mu(3).." , CheckStatus::known_discrepancy});
            continue;
        }
        for (const auto* c : row) {
            BigInt expected = mu_of(c->j, sigma);
            auto check = compare("table1", args({{"sigma", sigma}, {"j", c->j}}), c->value, "==", expected);
            if (check.status == CheckStatus::fail) {
                for (const auto& t : kKnownTypos) {
                    if (t.sigma == sigma && t.j == c->j && c->value == t.published) {
                        check.status = CheckStatus::known_discrepancy;
                    }
                }
            }
            out.push_back(std::move(check));
        }
    }
    return out;
}

VerifyReport run_verify(const VerifyOptions& options) {
    VerifyReport report;
    auto& out = report.checks;

    CountFn mu_of = options.mu_fn ? options.mu_fn
                                  : CountFn([](std::size_t j, std::uint32_t s) { return mu(j, s); });
    CountFn phi_of = options.phi_fn
                         ? options.phi_fn
                         : CountFn([mu_of](std::size_t k, std::uint32_t s) { return phi_with(k, s, mu_of); });

    // recurrence against exhaustive enumeration
    const std::uint64_t enum_cap = std::min<std::uint64_t>(options.budget, std::uint64_t{1} << 20);
    for (std::uint32_t sigma : {2U, 3U}) {
        for (std::size_t j = 1; string_space_size(j, sigma) <= enum_cap; ++j) {
            out.push_back(compare("mu_bruteforce", args({{"sigma", sigma}, {"j", j}}),
                                  count_aperiodic_bruteforce(j, sigma, enum_cap, options.workers), "==",
                                  mu_of(j, sigma)));
        }
    }

    for (std::uint32_t sigma = 2; sigma <= 5; ++sigma) {
        for (std::uint64_t p = 2; p <= 32; ++p) {
            if (!is_prime(p)) continue;
            std::uint64_t power = p;
            for (std::uint32_t t = 1; power <= 32; ++t, power *= p) {
                out.push_back(compare("prime_power", args({{"sigma", sigma}, {"p", p}, {"t", t}}),
                                      mu_prime_power(p, t, sigma), "==", mu_of(power, sigma)));
            }
        }
    }

    for (std::uint32_t sigma = 2; sigma <= 6; ++sigma) {
        for (std::size_t j = 1; j <= 20; ++j) {
            BigInt m = mu_of(j, sigma);
            if (j > 1) {
                out.push_back(compare("mu_upper", args({{"sigma", sigma}, {"j", j}}), m, "<=",
                                      ipow(sigma, j) - sigma));
            }
            out.push_back(compare("mu_lower", args({{"sigma", sigma}, {"j", j}}), m, ">=",
                                  BigInt(sigma) * ipow(sigma - 1, j - 1)));
        }
    }

    for (std::uint32_t sigma = 2; sigma <= 6; ++sigma) {
        for (std::size_t k = 1; k <= 20; ++k) {
            out.push_back(compare("phi_cap", args({{"sigma", sigma}, {"k", k}}), phi_of(k, sigma),
                                  "<=", BigInt(k) * ipow(sigma, k)));
        }
    }
    for (std::uint32_t sigma = 2; sigma <= 5; ++sigma) {
        BigInt prefix = 0;
        for (std::size_t m = 1; m <= 20; ++m) {
            prefix += phi_of(m, sigma);
            out.push_back(compare("phi_prefix_cap", args({{"sigma", sigma}, {"m", m}}), prefix,
                                  "<=", phi_prefix_cap(m, sigma)));
        }
    }

    struct Sweep {
        std::uint32_t sigma;
        std::size_t k_max;
        std::size_t n_max;
    };
    for (const Sweep& sweep : {Sweep{2, 5, 12}, Sweep{3, 3, 7}}) {
        for (std::size_t n = 1; n <= sweep.n_max; ++n) {
            auto counts = omega_distribution(n, sweep.sigma, options.budget, options.workers);
            BigInt total = 0;
            for (auto c : counts) total += c;
            out.push_back(compare("omega_partition", args({{"sigma", sweep.sigma}, {"n", n}}), total,
                                  "==", ipow(sweep.sigma, n)));
            for (std::size_t k = 1; k <= sweep.k_max && 2 * k <= n; ++k) {
                out.push_back(compare("omega_le_phi",
                                      args({{"sigma", sweep.sigma}, {"n", n}, {"k", k}}),
                                      BigInt(counts[k]), "<=", phi_of(k, sweep.sigma)));
            }
        }
    }

    for (auto [text, expected] : {std::pair{"aabccb", 5}, std::pair{"abcdefabcdab", 8}}) {
        Str s = make_string(text, alphabet_for(text));
        out.push_back(compare("growth_tree", text, growth_tree(s).value, "==", expected));
        out.push_back(compare("growth_oracle", text, growth_oracle(s).value, "==", expected));
    }

    for (const Sweep& sweep : {Sweep{2, 0, 12}, Sweep{3, 0, 7}}) {
        const Alphabet alphabet(sweep.sigma);
        for (std::size_t n = 2; n <= sweep.n_max; ++n) {
            const std::uint64_t total = require_budget(n, sweep.sigma, options.budget);
            std::size_t tree_mismatch = 0;
            std::size_t identity_mismatch = 0;
            for_each_string(n, sweep.sigma, 0, total, [&](std::span<const Symbol> raw) {
                auto tree = build_naive(make_string(raw, alphabet));
                if (growth_tree(tree).value != growth_oracle(raw)) ++tree_mismatch;
                if (node_count(tree) != growth_sum(raw)) ++identity_mismatch;
            });
            const auto item = args({{"sigma", sweep.sigma}, {"n", n}});
            out.push_back(compare("growth_tree_vs_oracle_mismatches", item, tree_mismatch, "==", 0));
            out.push_back(compare("node_count_identity_mismatches", item, identity_mismatch, "==", 0));
        }
    }

    {
        Str s = make_string("aabccb", Alphabet(3));
        auto naive = build_naive(s);
        auto compact = compress(naive);
        out.push_back(compare("figure", "naive(aabccb) nodes", node_count(naive), "==", 25));
        out.push_back(compare("figure", "compact(aabccb) nodes", node_count(compact), "==", 10));
        std::vector<std::string> labels;
        for (NodeId v = 1; v < compact.nodes().size(); ++v) labels.push_back(to_text(compact.edge_symbols(v)));
        std::vector<std::string> expected{"c", "b", "a", "b$", "cb$", "ccb$", "$", "bccb$", "abccb$"};
        std::sort(labels.begin(), labels.end());
        std::sort(expected.begin(), expected.end());
        out.push_back(compare("figure", "compact(aabccb) edge label multiset matches",
                              labels == expected ? 1 : 0, "==", 1));
    }

    if (options.table1) {
        auto table = check_table1(load_table1(*options.table1), mu_of);
        out.insert(out.end(), table.begin(), table.end());
    }
    return report;
}

}  // namespace stree
