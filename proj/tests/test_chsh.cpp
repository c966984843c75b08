#include "qcog/chsh.hpp"
#include "qcog/error.hpp"
#include "qcog/lhv.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qcog;

namespace {

const std::string kDataDir = QCOG_DATA_DIR;

ChshSuite published_suite() { return parse_chsh_suite_file(kDataDir + "/published/chsh.json"); }

CoincidenceDataset with_counts(CoincidenceDataset d, const std::array<std::array<std::int64_t, 2>, 4>& counts) {
    for (int k = 0; k < 4; ++k) {
        d.cells[k / 2][k % 2].total = counts[k][0];
        d.cells[k / 2][k % 2].positives = counts[k][1];
    }
    return d;
}

bool within(double x, double target, double tol) { return std::abs(x - target) <= tol; }

}  // namespace

TEST_CASE("raw_joint") {
    const ChshSuite s = published_suite();
    auto raw = raw_joint(s.ab).as_double();
    CHECK(raw[0] == 0.01);
    CHECK(within(raw[1], 0.0997, 5e-5));
    CHECK(within(raw[2], 0.3737, 5e-5));
    CHECK(within(raw[3], 0.0051, 5e-5));
    CHECK_FALSE(raw_joint(s.ab).normalized);
    CHECK(raw_joint(s.ab).p12() == Rational(39, 391));

    raw = raw_joint(s.apbp).as_double();
    CHECK(raw[0] == 0.075);
    CHECK(within(raw[1], 0.0248, 5e-5));
    CHECK(within(raw[2], 0.0383, 5e-5));
    CHECK(within(raw[3], 0.4035, 5e-5));

    const auto zero = raw_joint(with_counts(s.ab, {{{10, 0}, {10, 0}, {10, 0}, {10, 0}}})).as_double();
    for (double x : zero) CHECK(x == 0.0);
}

TEST_CASE("normalize") {
    const ChshSuite s = published_suite();
    auto n = normalize(raw_joint(s.ab));
    CHECK(within(to_double(n.sum), 0.4884, 5e-4));
    const std::array<double, 4> ab_expected = {0.0205, 0.2042, 0.7651, 0.0103};
    for (int k = 0; k < 4; ++k) CHECK(within(n.joint.as_double()[k], ab_expected[k], 5e-4));
    CHECK(n.joint.cells[0] + n.joint.cells[1] + n.joint.cells[2] + n.joint.cells[3] == 1);

    n = normalize(raw_joint(s.apb));
    CHECK(within(to_double(n.sum), 0.7514, 5e-4));
    const std::array<double, 4> apb_expected = {0.7305, 0.0099, 0.2563, 0.0033};
    for (int k = 0; k < 4; ++k) CHECK(within(n.joint.as_double()[k], apb_expected[k], 5e-4));

    CHECK_THROWS_AS(normalize(make_joint(0, 0, 0, 0)), DegenerateError);
}

TEST_CASE("normalize is idempotent and scale invariant") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 300; ++k) {
        const JointProbabilities jp = make_joint(u(rng), u(rng), u(rng), u(rng));
        const auto once = normalize(jp);
        const auto twice = normalize(once.joint);
        CHECK(twice.joint.cells == once.joint.cells);
        CHECK(twice.sum == 1);
        const Rational c(1 + rng() % 97, 1 + rng() % 89);
        JointProbabilities scaled = jp;
        for (auto& x : scaled.cells) x *= c;
        CHECK(normalize(scaled).joint.cells == once.joint.cells);
    }
}

TEST_CASE("expectation") {
    const ChshSuite s = published_suite();
    CHECK(within(to_double(expectation(normalize(raw_joint(s.ab)).joint)), -0.9385, 5e-4));
    CHECK(within(to_double(expectation(normalize(raw_joint(s.abp)).joint)), 0.2376, 5e-4));
    CHECK(expectation(make_joint(0.25, 0.25, 0.25, 0.25, true)) == 0);
    CHECK_THROWS_AS(expectation(raw_joint(s.ab)), DomainError);
}

TEST_CASE("expectation range and extremes") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const auto n = normalize(make_joint(u(rng), u(rng), u(rng), u(rng)));
        const Rational e = expectation(n.joint);
        CHECK(e >= -1);
        CHECK(e <= 1);
    }
    CHECK(expectation(normalize(make_joint(0.3, 0, 0, 0.1)).joint) == 1);
    CHECK(expectation(normalize(make_joint(0, 0.2, 0.6, 0)).joint) == -1);
    CHECK(expectation(normalize(make_joint(0.3, 0.01, 0, 0.1)).joint) < 1);
}

TEST_CASE("chsh_statistic") {
    auto r = chsh_statistic({-0.9385, 0.2376, 0.4675, 0.7671});
    CHECK(r.s_value == doctest::Approx(2.4107));
    CHECK(r.verdict == ChshVerdict::quantum_violation);

    r = chsh_statistic({1, 1, 1, 1});
    CHECK(r.s_value == 2.0);
    CHECK(r.verdict == ChshVerdict::classical);

    r = chsh_statistic({-1, 1, 1, 1});
    CHECK(r.s_value == 4.0);
    CHECK(r.verdict == ChshVerdict::superquantum);

    CHECK(chsh_statistic({1, -1, -1, -1}).verdict == ChshVerdict::superquantum);
    CHECK(chsh_statistic({0.75, -0.75, -0.75, -0.75}).s_value == -3.0);
    CHECK(classify_chsh(-2.5) == ChshVerdict::quantum_violation);
    CHECK(classify_chsh(Rational(-5, 2)) == ChshVerdict::quantum_violation);
    CHECK(classify_chsh(Rational(2)) == ChshVerdict::classical);
    CHECK(classify_chsh(Rational(283, 100)) == ChshVerdict::superquantum);
    CHECK(classify_chsh(Rational(282, 100)) == ChshVerdict::quantum_violation);
    CHECK_THROWS_AS(chsh_statistic({1.5, 0, 0, 0}), DomainError);
}

TEST_CASE("relabeling flips two expectation values and max_chsh equals the best facet") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 500; ++k) {
        const ExpectationSet es{u(rng), u(rng), u(rng), u(rng)};
        const ExpectationSet a = relabel(es, true, false, false, false);
        CHECK(a.e_ab == -es.e_ab);
        CHECK(a.e_abp == -es.e_abp);
        CHECK(a.e_apb == es.e_apb);
        CHECK(a.e_apbp == es.e_apbp);
        // flipping every setting is the identity on correlations
        const ExpectationSet all = relabel(es, true, true, true, true);
        CHECK(chsh_value(all) == chsh_value(es));

        double best_facet = -4.0;
        for (const auto& f : membership_report(es).facets) best_facet = std::max(best_facet, f.value);
        CHECK(max_chsh(es) == doctest::Approx(best_facet));
    }
}

TEST_CASE("degenerate_identity_check") {
    CHECK(degenerate_identity_check(-0.9385) == doctest::Approx(-1.877));
    CHECK(degenerate_identity_check(1.0) == 2.0);
    CHECK(degenerate_identity_check(0.0) == 0.0);
    CHECK_THROWS_AS(degenerate_identity_check(1.1), DomainError);
}

TEST_CASE("run_suite on the published counts") {
    const auto r = run_suite(published_suite());
    // Exact value from the raw counts (Fraction oracle); the published 2.4107
    // used a mis-rounded 2/389 = 0.0050.
    CHECK(to_string(r.s_exact) == "318696466333086454345866130024/132229472091748931184549207943");
    CHECK(within(r.result.s_value, 2.410177256943, 1e-12));
    CHECK(r.result.verdict == ChshVerdict::quantum_violation);
    const std::array<double, 4> sums = {0.488569844225, 0.182748597802, 0.751415021800, 0.541587973834};
    const std::array<double, 4> es = {-0.938017508228, 0.237577536674, 0.467523876005, 0.767058336035};
    for (int k = 0; k < 4; ++k) {
        CHECK(within(r.result.normalization_sums[k], sums[k], 1e-12));
        CHECK(within(r.result.expectations[kSettingPairs[k]], es[k], 1e-12));
    }
    // Published 4-decimal figures.
    const std::array<double, 4> published_sums = {0.4884, 0.1827, 0.7514, 0.5416};
    const std::array<double, 4> published_es = {-0.9385, 0.2376, 0.4675, 0.7671};
    for (int k = 0; k < 4; ++k) {
        CHECK(within(r.result.normalization_sums[k], published_sums[k], 5e-4));
        CHECK(within(r.result.expectations[kSettingPairs[k]], published_es[k], 5e-4));
    }
}

TEST_CASE("run_suite with identical experiments gives 2E") {
    ChshSuite s = published_suite();
    s.abp.cells = s.ab.cells;
    s.apb.cells = s.ab.cells;
    s.apbp.cells = s.ab.cells;
    const auto r = run_suite(s);
    CHECK(r.s_exact == 2 * r.experiments[0].expectation);
    CHECK(r.result.verdict == ChshVerdict::classical);
}

TEST_CASE("run_suite on data generated by a deterministic local strategy stays within 2") {
    const ChshSuite base = published_suite();
    std::mt19937_64 rng(29);
    for (const auto& st : enumerate_strategies()) {
        ChshSuite s = base;
        const std::array<int, 2> side_a = {st.a, st.a_prime};
        const std::array<int, 2> side_b = {st.b, st.b_prime};
        for (auto pair : kSettingPairs) {
            const bool primed_a = pair == SettingPair::ApB || pair == SettingPair::ApBp;
            const bool primed_b = pair == SettingPair::ABp || pair == SettingPair::ApBp;
            // outcome index 0 means +1
            const int oa = side_a[primed_a] > 0 ? 0 : 1;
            const int ob = side_b[primed_b] > 0 ? 0 : 1;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    auto& c = s.at(pair).cells[i][j];
                    c.total = 300 + rng() % 200;
                    c.positives = (i == oa && j == ob) ? 1 + rng() % c.total : 0;
                }
        }
        const auto r = run_suite(s);
        CHECK(abs(r.s_exact) <= 2);
        CHECK(r.result.verdict == ChshVerdict::classical);
    }
}

TEST_CASE("run_suite reports the degenerate experiment") {
    ChshSuite s = published_suite();
    for (auto& row : s.apb.cells)
        for (auto& c : row) c.positives = 0;
    try {
        run_suite(s);
        FAIL("expected DegenerateError");
    } catch (const DegenerateError& e) {
        CHECK(std::string(e.what()).find("ApB") != std::string::npos);
    }
}
