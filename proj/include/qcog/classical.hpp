#pragma once

#include "qcog/ingest.hpp"
#include "qcog/rational.hpp"

#include <cstddef>
#include <vector>

namespace qcog {

struct ConjunctionProbabilities {
    double p_a = 0.0;
    double p_b = 0.0;
    double p_ab = 0.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return lo <= x && x <= hi; }
};

/// Fréchet bounds on P(A and B) given the marginals:
/// [max(0, p_a + p_b - 1), min(p_a, p_b)].
Interval kolmogorov_interval(double p_a, double p_b);

enum class Overextension { none, single_over_a, single_over_b, double_ };

const char* to_string(Overextension kind);

struct OverextensionVerdict {
    Overextension kind = Overextension::none;
    double margin_a = 0.0;  // p_ab - p_a
    double margin_b = 0.0;  // p_ab - p_b
};

/// Margins up to kMarginTolerance count as zero, and zero is not overextended.
inline constexpr double kMarginTolerance = 1e-12;

OverextensionVerdict classify_overextension(const ConjunctionProbabilities& p);

/// Exact variant used when the probabilities come from counts.
OverextensionVerdict classify_overextension(const Rational& p_a, const Rational& p_b, const Rational& p_ab);

/// A probability measure on {0, ..., n-1} with two events.
struct FiniteMeasureModel {
    std::vector<double> weights;
    std::vector<std::size_t> subset_a;
    std::vector<std::size_t> subset_b;
};

void validate(const FiniteMeasureModel& model);

struct MeasureCheck {
    double mu_a = 0.0;
    double mu_b = 0.0;
    double mu_union = 0.0;
    double mu_intersection = 0.0;
    bool union_ok = false;  // mu(A u B) <= mu(A) + mu(B)
    bool cap_a_ok = false;  // mu(A n B) <= mu(A)
    bool cap_b_ok = false;  // mu(A n B) <= mu(B)
};

MeasureCheck measure_check(const FiniteMeasureModel& model);

struct ConjunctionReport {
    ConjunctionDataset dataset;
    Rational exact_a;
    Rational exact_b;
    Rational exact_ab;
    ConjunctionProbabilities probabilities;
    OverextensionVerdict verdict;
    Interval kolmogorov;
    bool below_lower = false;  // p_ab < lo
    bool above_upper = false;  // p_ab > hi

    bool violation() const { return below_lower || above_upper; }
};

ConjunctionReport conjunction_report(const ConjunctionDataset& dataset);

}  // namespace qcog
