#include "qcog/classical.hpp"
#include "qcog/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace qcog;

namespace {

// Exhaustive oracle: every measure on the four atoms AB, A¬B, ¬AB, ¬A¬B with
// weights in multiples of 1/n. Returns the attainable P(A and B) values for
// the given marginals (also multiples of 1/n).
std::set<int> attainable_intersections(int n, int a, int b) {
    std::set<int> out;
    for (int w_ab = 0; w_ab <= n; ++w_ab)
        for (int w_a = 0; w_ab + w_a <= n; ++w_a)
            for (int w_b = 0; w_ab + w_a + w_b <= n; ++w_b)
                if (w_ab + w_a == a && w_ab + w_b == b) out.insert(w_ab);
    return out;
}

ConjunctionDataset dataset(std::int64_t na, std::int64_t ka, std::int64_t nb, std::int64_t kb, std::int64_t nab,
                           std::int64_t kab) {
    return {"A", "B", "s", {"A", na, ka, "s", {}}, {"B", nb, kb, "s", {}}, {"A and B", nab, kab, "s", {}}};
}

}  // namespace

TEST_CASE("kolmogorov_interval examples") {
    auto i = kolmogorov_interval(0.05, 0.95);
    CHECK(i.lo == 0.0);
    CHECK(i.hi == 0.05);
    CHECK(i.contains(0.05 * 0.95));

    i = kolmogorov_interval(1, 1);
    CHECK(i.lo == 1.0);
    CHECK(i.hi == 1.0);

    // Oracle: grid of tenths gives attainable P(A∩B) in {0, .1, .2, .3}.
    const auto attainable = attainable_intersections(10, 3, 4);
    CHECK(*attainable.begin() == 0);
    CHECK(*attainable.rbegin() == 3);
    i = kolmogorov_interval(0.3, 0.4);
    CHECK(i.lo == 0.0);
    CHECK(i.hi == doctest::Approx(0.3));
}

TEST_CASE("kolmogorov_interval endpoints match the exhaustive oracle on a grid") {
    constexpr int n = 20;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            const auto attainable = attainable_intersections(n, a, b);
            REQUIRE_FALSE(attainable.empty());
            const auto i = kolmogorov_interval(double(a) / n, double(b) / n);
            CHECK(i.lo == doctest::Approx(double(*attainable.begin()) / n));
            CHECK(i.hi == doctest::Approx(double(*attainable.rbegin()) / n));
            CHECK(i.lo <= i.hi);
        }
}

TEST_CASE("kolmogorov endpoints are realized by a model with three atoms") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const double pa = u(rng), pb = u(rng);
        const auto iv = kolmogorov_interval(pa, pb);
        for (double x : {iv.lo, iv.hi}) {
            // atoms: A∩B, A only, B only, neither
            std::vector<double> w = {x, pa - x, pb - x, 1.0 - pa - pb + x};
            int nonzero = 0;
            for (double& wi : w) {
                CHECK(wi >= -1e-12);
                wi = std::max(wi, 0.0);
                nonzero += wi > 1e-15;
            }
            CHECK(nonzero <= 3);
            const double total = w[0] + w[1] + w[2] + w[3];
            for (double& wi : w) wi /= total;
            const auto c = measure_check({w, {0, 1}, {0, 2}});
            CHECK(c.mu_intersection == doctest::Approx(x).epsilon(1e-9));
        }
    }
}

TEST_CASE("classify_overextension examples") {
    auto v = classify_overextension({155.0 / 415, 22.0 / 475, 303.0 / 365});
    CHECK(v.kind == Overextension::double_);
    v = classify_overextension({0.16, 0.0436, 0.2968});
    CHECK(v.kind == Overextension::double_);
    v = classify_overextension({0.5, 0.5, 0.25});
    CHECK(v.kind == Overextension::none);
    CHECK(v.margin_a == -0.25);

    // Linda: only bank teller is exceeded.
    v = classify_overextension({0.05, 0.7, 0.4});
    CHECK(v.kind == Overextension::single_over_a);
    v = classify_overextension({0.7, 0.05, 0.4});
    CHECK(v.kind == Overextension::single_over_b);

    // Ties are not overextension.
    CHECK(classify_overextension({0.4, 0.4, 0.4}).kind == Overextension::none);
    CHECK(classify_overextension(Rational(2, 5), Rational(1, 5), Rational(2, 5)).kind ==
          Overextension::single_over_b);
}

TEST_CASE("classify_overextension is symmetric under swapping A and B") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto swap_kind = [](Overextension k) {
        if (k == Overextension::single_over_a) return Overextension::single_over_b;
        if (k == Overextension::single_over_b) return Overextension::single_over_a;
        return k;
    };
    for (int k = 0; k < 5000; ++k) {
        const ConjunctionProbabilities p{u(rng), u(rng), u(rng)};
        const auto v = classify_overextension(p);
        const auto w = classify_overextension({p.p_b, p.p_a, p.p_ab});
        CHECK(w.kind == swap_kind(v.kind));
        CHECK(w.margin_a == v.margin_b);
        // verdict invariant
        CHECK((v.kind == Overextension::double_) == (v.margin_a > 0 && v.margin_b > 0));
        CHECK((v.kind == Overextension::none) == (v.margin_a <= 0 && v.margin_b <= 0));
    }
}

TEST_CASE("measure_check examples") {
    // Cat, Horse, Donkey, Mouse, Squirrel: A = {Cat, Horse, Donkey}, B = {Cat, Mouse, Squirrel}.
    auto c = measure_check({{0.2, 0.2, 0.2, 0.2, 0.2}, {0, 1, 2}, {0, 3, 4}});
    CHECK(c.union_ok);
    CHECK(c.cap_a_ok);
    CHECK(c.cap_b_ok);
    CHECK(c.mu_intersection == doctest::Approx(0.2));
    CHECK(c.mu_union == doctest::Approx(1.0));

    c = measure_check({{0.5, 0.25, 0.25}, {0, 1, 2}, {0, 1, 2}});
    CHECK((c.union_ok && c.cap_a_ok && c.cap_b_ok));
    CHECK(c.mu_union == c.mu_a);
    CHECK(c.mu_a == c.mu_b);

    CHECK_THROWS_AS(measure_check({{0.5, 0.4}, {0}, {1}}), ValidationError);
    CHECK_THROWS_AS(measure_check({{0.5, 0.5}, {0}, {2}}), ValidationError);
    CHECK_THROWS_AS(measure_check({{1.5, -0.5}, {0}, {1}}), ValidationError);
}

TEST_CASE("random finite measure models respect the bounds and never overextend") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 10000; ++k) {
        const std::size_t n = 1 + rng() % 12;
        std::vector<double> w(n);
        double total = 0.0;
        for (double& x : w) total += (x = std::exponential_distribution<double>(1.0)(rng));
        for (double& x : w) x /= total;
        // renormalizing can leave the sum off by a few ulps; fold the error into one weight
        double s = 0.0;
        for (double x : w) s += x;
        w[0] = std::max(0.0, w[0] + (1.0 - s));
        std::vector<std::size_t> a, b;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng() % 2) a.push_back(i);
            if (rng() % 2) b.push_back(i);
        }
        const auto c = measure_check({w, a, b});
        CHECK((c.union_ok && c.cap_a_ok && c.cap_b_ok));
        CHECK(classify_overextension({c.mu_a, c.mu_b, c.mu_intersection}).kind == Overextension::none);
    }
}

TEST_CASE("conjunction_report") {
    auto r = conjunction_report(dataset(415, 155, 475, 22, 365, 303));
    CHECK(r.verdict.kind == Overextension::double_);
    CHECK(r.violation());
    CHECK(r.above_upper);
    CHECK(r.probabilities.p_ab == doctest::Approx(0.8301).epsilon(1e-4));

    r = conjunction_report(dataset(325, 52, 390, 17, 310, 92));
    CHECK(r.verdict.kind == Overextension::double_);
    CHECK(r.violation());

    r = conjunction_report(dataset(100, 50, 100, 40, 100, 20));
    CHECK(r.verdict.kind == Overextension::none);
    CHECK_FALSE(r.violation());

    // p_a + p_b - 1 = 0.3 > p_ab: below the lower bound but no overextension.
    r = conjunction_report(dataset(10, 6, 10, 7, 10, 2));
    CHECK(r.below_lower);
    CHECK(r.violation());
    CHECK(r.verdict.kind == Overextension::none);

    // Exact tie at the upper bound: 1/3 vs 2/6.
    r = conjunction_report(dataset(3, 1, 10, 9, 6, 2));
    CHECK(r.verdict.kind == Overextension::none);
    CHECK_FALSE(r.violation());
}
