// stree: suffix tree construction, growth statistics and the counting
// experiments built on them.
//
// Exit status: 0 success, 1 verification failure, 2 usage or budget error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stree/combinatorics.hpp"
#include "stree/error.hpp"
#include "stree/experiments.hpp"
#include "stree/growth.hpp"
#include "stree/suffix_tree.hpp"
#include "stree/table.hpp"
#include "stree/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    std::optional<std::uint32_t> sigma;
    std::uint64_t seed = 42;
    std::uint64_t samples = 1000;
    std::uint64_t budget = stree::kDefaultBudget;
    unsigned workers = 1;
    std::string format = "csv";
    std::string mode = "exhaustive";
    std::string out;
};

void emit(const GlobalOptions& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file) throw stree::ConfigError("cannot write " + g.out);
    file << text;
}

void emit(const GlobalOptions& g, const stree::Table& table) {
    emit(g, table.render(stree::parse_format(g.format)));
}

stree::Str parse_text(const GlobalOptions& g, const std::string& text) {
    stree::Alphabet alphabet = g.sigma ? stree::Alphabet(*g.sigma) : stree::alphabet_for(text);
    return stree::make_string(text, alphabet);
}

stree::ExperimentConfig make_config(const GlobalOptions& g, std::vector<std::size_t> n_list) {
    stree::ExperimentConfig config;
    config.sigma = g.sigma.value_or(2);
    config.n_list = std::move(n_list);
    config.samples = g.samples;
    config.seed = g.seed;
    config.mode = stree::parse_mode(g.mode);
    config.budget = g.budget;
    config.workers = g.workers;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Naive and compact suffix trees, growth statistics and counting experiments"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--sigma", g.sigma, "Alphabet size (string commands infer it from the input)")
        ->check(CLI::Range(1U, 1000000U));
    app.add_option("--seed", g.seed, "Root seed for Monte Carlo streams")->capture_default_str();
    app.add_option("--samples", g.samples, "Monte Carlo sample count")->capture_default_str();
    app.add_option("--budget", g.budget, "Maximum number of strings to enumerate")->capture_default_str();
    app.add_option("--workers", g.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--mode", g.mode, "Expectation mode")
        ->check(CLI::IsMember({"exhaustive", "montecarlo"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "Write output to PATH instead of stdout");

    std::string text;
    std::string pattern;
    bool compact = false;
    bool dot = false;
    auto* tree_cmd = app.add_subcommand("tree", "Build a suffix tree and print statistics or DOT");
    tree_cmd->add_option("string", text, "Input over a..z")->required();
    tree_cmd->add_flag("--compact", compact, "Compress unary chains");
    tree_cmd->add_flag("--dot", dot, "Print Graphviz DOT instead of the statistics line");

    auto* growth_cmd = app.add_subcommand("growth", "Growth of a string, by tree and by LCP oracle");
    growth_cmd->add_option("string", text, "Input over a..z")->required();

    std::size_t max_index = 8;
    auto* mu_cmd = app.add_subcommand("mu", "Aperiodic string counts mu(j, sigma)");
    mu_cmd->add_option("--max-j", max_index, "Largest length j")->capture_default_str();

    auto* phi_cmd = app.add_subcommand("phi", "Growth count bound phi(k, sigma)");
    phi_cmd->add_option("--max-k", max_index, "Largest growth k")->capture_default_str();

    std::vector<std::size_t> n_list;
    auto* omega_cmd = app.add_subcommand("omega", "Exhaustive Omega(n, k, sigma) against phi(k, sigma)");
    omega_cmd->add_option("--n", n_list, "String length(s)")->required()->delimiter(',');

    std::string table1;
    std::string fault = "none";
    auto* verify_cmd = app.add_subcommand("verify", "Run every inequality and exhaustive identity check");
    verify_cmd->add_option("--table1", table1, "CSV of published mu values (sigma,j,value)");
    verify_cmd->add_option("--inject-fault", fault, "Seed a fault to prove the checks bite")
        ->check(CLI::IsMember({"none", "mu", "phi"}))
        ->capture_default_str();

    std::string regime = "both";
    std::string given;
    auto* eg_cmd = app.add_subcommand("expect-growth", "Expected growth of a random string");
    eg_cmd->add_option("--n", n_list, "String length(s), ascending")->delimiter(',');
    eg_cmd->add_option("--regime", regime, "Sampling regime")
        ->check(CLI::IsMember({"uniform", "prepend", "both"}))
        ->capture_default_str();
    eg_cmd->add_option("--given", given, "Exact expectation over the first symbol for this fixed tail");

    auto* es_cmd = app.add_subcommand("expect-size", "Expected naive suffix tree size");
    es_cmd->add_option("--n", n_list, "String length(s), ascending")->required()->delimiter(',');

    auto* search_cmd = app.add_subcommand("search", "Occurrences of a pattern via the compact tree");
    search_cmd->add_option("text", text, "Text over a..z")->required();
    search_cmd->add_option("pattern", pattern, "Pattern over a..z")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*tree_cmd) {
            stree::Str s = parse_text(g, text);
            auto naive = stree::build_naive(s);
            const auto growth = stree::growth_tree(naive).value;
            if (compact) {
                auto tree = stree::compress(naive);
                emit(g, dot ? stree::to_dot(tree) : stree::stats_line(s, tree.counts(), growth) + "\n");
            } else {
                emit(g, dot ? stree::to_dot(naive) : stree::stats_line(s, naive.counts(), growth) + "\n");
            }
        } else if (*growth_cmd) {
            stree::Str s = parse_text(g, text);
            const auto by_tree = stree::growth_tree(s).value;
            const auto by_oracle = stree::growth_oracle(s).value;
            emit(g, "n=" + std::to_string(s.size()) + " sigma=" + std::to_string(s.alphabet().size()) +
                        " growth=" + std::to_string(by_tree) + " oracle=" + std::to_string(by_oracle) + "\n");
            if (by_tree != by_oracle) return kExitVerifyFailed;
        } else if (*mu_cmd) {
            emit(g, stree::mu_table(g.sigma.value_or(2), max_index).to_table());
        } else if (*phi_cmd) {
            emit(g, stree::phi_table(g.sigma.value_or(2), max_index).to_table());
        } else if (*omega_cmd) {
            emit(g, stree::run_omega(make_config(g, n_list)));
        } else if (*verify_cmd) {
            stree::VerifyOptions options;
            options.budget = g.budget;
            options.workers = g.workers;
            if (!table1.empty()) options.table1 = table1;
            if (fault == "mu") {
                options.mu_fn = [](std::size_t j, std::uint32_t s) { return stree::mu(j, s) + (j == 4 ? 1 : 0); };
            } else if (fault == "phi") {
                options.phi_fn = [](std::size_t k, std::uint32_t s) { return stree::phi(k, s).value - 1; };
            }
            auto report = stree::run_verify(options);
            emit(g, report.to_table());
            std::cerr << report.checks.size() << " checks, " << report.failures() << " failed, "
                      << report.known_discrepancies() << " known discrepancies\n";
            return report.passed() ? kExitOk : kExitVerifyFailed;
        } else if (*eg_cmd) {
            if (!given.empty()) {
                emit(g, stree::to_table({stree::expected_growth_given(parse_text(g, given))}));
                return kExitOk;
            }
            if (n_list.empty()) throw stree::ConfigError("expect-growth needs --n or --given");
            std::vector<stree::GrowthRegime> regimes;
            if (regime != "prepend") regimes.push_back(stree::GrowthRegime::uniform);
            if (regime != "uniform") regimes.push_back(stree::GrowthRegime::prepend);
            emit(g, stree::to_table(stree::run_expected_growth(make_config(g, n_list), regimes)));
        } else if (*es_cmd) {
            emit(g, stree::to_table(stree::run_expected_size(make_config(g, n_list))));
        } else if (*search_cmd) {
            stree::Str s = parse_text(g, text);
            stree::Str p = stree::make_string(pattern, s.alphabet());
            stree::Table t({{"position", stree::ColumnKind::integer}});
            for (auto pos : stree::find_occurrences(stree::build_compact(s), p)) t.add_row({std::to_string(pos)});
            emit(g, t);
        }
    } catch (const stree::Error& e) {
        std::cerr << "stree: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
