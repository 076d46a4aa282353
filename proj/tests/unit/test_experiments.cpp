#include <doctest.h>

#include <cmath>

#include "stree/error.hpp"
#include "stree/experiments.hpp"

using namespace stree;

namespace {

ExperimentConfig config(std::uint32_t sigma, std::vector<std::size_t> n, Mode mode,
                        std::uint64_t samples = 1000) {
    ExperimentConfig c;
    c.sigma = sigma;
    c.n_list = std::move(n);
    c.mode = mode;
    c.samples = samples;
    return c;
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(config(1, {4}, Mode::exhaustive).validate(), ConfigError);
    CHECK_THROWS_AS(config(2, {}, Mode::exhaustive).validate(), ConfigError);
    CHECK_THROWS_AS(config(2, {8, 4}, Mode::exhaustive).validate(), ConfigError);
    CHECK_THROWS_AS(config(2, {0}, Mode::exhaustive).validate(), ConfigError);
    CHECK_THROWS_AS(config(2, {4}, Mode::montecarlo, 0).validate(), ConfigError);
    CHECK_THROWS_AS(config(2, {30}, Mode::exhaustive).validate(), BudgetError);
    CHECK_NOTHROW(config(2, {30}, Mode::montecarlo).validate());
    auto c = config(2, {4}, Mode::exhaustive);
    c.workers = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);

    CHECK(parse_mode("montecarlo") == Mode::montecarlo);
    CHECK_THROWS_AS(parse_mode("sampled"), ConfigError);
    CHECK(parse_regime("prepend") == GrowthRegime::prepend);
    CHECK_THROWS_AS(parse_regime("x"), ConfigError);
}

TEST_CASE("omega report") {
    auto t = run_omega(config(2, {2, 4}, Mode::exhaustive));
    CHECK(t.to_csv() ==
          "n,k,omega,phi,n_ge_2k,omega_le_phi\n"
          "2,1,2,2,true,true\n"
          "2,2,2,4,false,true\n"
          "4,1,2,2,true,true\n"
          "4,2,4,4,true,true\n"
          "4,3,8,12,false,true\n"
          "4,4,2,30,false,true\n");
    CHECK_THROWS_AS(run_omega(config(2, {30}, Mode::exhaustive)), BudgetError);

    auto one = config(3, {7}, Mode::exhaustive);
    auto eight = one;
    eight.workers = 8;
    CHECK(run_omega(one) == run_omega(eight));
}

TEST_CASE("exhaustive expected growth") {
    auto est = run_expected_growth(config(2, {1, 2}, Mode::exhaustive),
                                   {GrowthRegime::uniform, GrowthRegime::prepend});
    REQUIRE(est.size() == 4);
    CHECK(est[0].mean == 1.0);
    CHECK(*est[0].exact_mean == Rational(1));
    CHECK(est[2].mean == 1.5);
    CHECK(*est[2].exact_mean == Rational(3, 2));
    CHECK(est[2].samples == 4);
    CHECK(est[2].stderr_mean == 0.0);
    CHECK(est[2].ratio == 0.75);
    // both regimes average over the same strings when enumerated
    CHECK(*est[3].exact_mean == *est[2].exact_mean);
    CHECK(est[3].regime == "prepend");
}

TEST_CASE("expected growth given a fixed tail") {
    // tail "b": ab has growth 2, bb has growth 1
    auto e = expected_growth_given(make_string("b", Alphabet(2)));
    CHECK(*e.exact_mean == Rational(3, 2));
    CHECK(e.n == 2);
    CHECK(e.samples == 2);
}

TEST_CASE("montecarlo agrees with exhaustive within 3 standard errors") {
    auto exact = run_expected_growth(config(2, {10}, Mode::exhaustive), {GrowthRegime::uniform});
    auto mc = run_expected_growth(config(2, {10}, Mode::montecarlo, 100000),
                                  {GrowthRegime::uniform, GrowthRegime::prepend});
    for (const auto& e : mc) {
        CAPTURE(e.regime);
        CHECK(e.stderr_mean > 0.0);
        CHECK(std::abs(e.mean - exact[0].mean) <= 3 * e.stderr_mean);
    }
}

TEST_CASE("expected size") {
    auto e = run_expected_size(config(2, {2}, Mode::exhaustive));
    REQUIRE(e.size() == 1);
    CHECK(*e[0].exact_mean == Rational(11, 2));
    CHECK(e[0].ratio == 5.5 / 4.0);

    auto mc = run_expected_size(config(4, {64}, Mode::montecarlo, 200));
    CHECK(mc[0].ratio >= 0.45);
}

TEST_CASE("seeded runs are byte-identical regardless of worker count") {
    auto c = config(3, {16, 40}, Mode::montecarlo, 300);
    const auto regimes = std::vector{GrowthRegime::uniform, GrowthRegime::prepend};
    auto first = to_table(run_expected_growth(c, regimes)).to_csv();
    CHECK(to_table(run_expected_growth(c, regimes)).to_csv() == first);
    c.workers = 3;
    CHECK(to_table(run_expected_growth(c, regimes)).to_csv() == first);

    auto size_csv = to_table(run_expected_size(c)).to_csv();
    c.workers = 1;
    CHECK(to_table(run_expected_size(c)).to_csv() == size_csv);

    c.seed = 43;
    CHECK(to_table(run_expected_size(c)).to_csv() != size_csv);
}

TEST_CASE("estimate table layout") {
    auto t = to_table(run_expected_growth(config(2, {2}, Mode::exhaustive), {GrowthRegime::uniform}));
    CHECK(t.to_csv() ==
          "n,sigma,quantity,regime,mode,samples,mean,mean_exact,stderr,ratio\n"
          "2,2,growth,uniform,exhaustive,4,1.5,3/2,0,0.75\n");
}

TEST_CASE("harness tables survive a CSV round trip") {
    std::vector<Table> tables{
        run_omega(config(2, {5}, Mode::exhaustive)),
        to_table(run_expected_growth(config(2, {3, 8}, Mode::exhaustive), {GrowthRegime::uniform})),
        to_table(run_expected_size(config(3, {20}, Mode::montecarlo, 30))),
    };
    for (const auto& t : tables) CHECK(Table::from_csv(t.to_csv(), t.columns()) == t);
}
