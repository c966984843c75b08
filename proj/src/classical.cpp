#include "qcog/classical.hpp"

#include "qcog/error.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qcog {

Interval kolmogorov_interval(double p_a, double p_b) {
    const double hi = std::min(p_a, p_b);
    // p_a + p_b - 1 can overshoot hi by an ulp when one marginal is 1.
    return {std::min(std::max(0.0, p_a + p_b - 1.0), hi), hi};
}

const char* to_string(Overextension kind) {
    switch (kind) {
        case Overextension::none: return "none";
        case Overextension::single_over_a: return "single_over_a";
        case Overextension::single_over_b: return "single_over_b";
        case Overextension::double_: return "double";
    }
    return "?";
}

namespace {

Overextension kind_from(bool over_a, bool over_b) {
    if (over_a && over_b) return Overextension::double_;
    if (over_a) return Overextension::single_over_a;
    if (over_b) return Overextension::single_over_b;
    return Overextension::none;
}

}  // namespace

OverextensionVerdict classify_overextension(const ConjunctionProbabilities& p) {
    OverextensionVerdict v;
    v.margin_a = p.p_ab - p.p_a;
    v.margin_b = p.p_ab - p.p_b;
    v.kind = kind_from(v.margin_a > kMarginTolerance, v.margin_b > kMarginTolerance);
    return v;
}

OverextensionVerdict classify_overextension(const Rational& p_a, const Rational& p_b, const Rational& p_ab) {
    OverextensionVerdict v;
    const Rational ma = p_ab - p_a;
    const Rational mb = p_ab - p_b;
    v.margin_a = to_double(ma);
    v.margin_b = to_double(mb);
    v.kind = kind_from(ma > 0, mb > 0);
    return v;
}

void validate(const FiniteMeasureModel& m) {
    if (m.weights.empty()) throw ValidationError("finite measure model needs at least one point");
    double total = 0.0;
    for (double w : m.weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("weights must be finite and non-negative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw ValidationError("weights must sum to 1");
    for (const auto* subset : {&m.subset_a, &m.subset_b})
        for (std::size_t i : *subset)
            if (i >= m.weights.size()) throw ValidationError("subset index out of range");
}

MeasureCheck measure_check(const FiniteMeasureModel& m) {
    validate(m);
    std::vector<char> in_a(m.weights.size(), 0), in_b(m.weights.size(), 0);
    for (std::size_t i : m.subset_a) in_a[i] = 1;
    for (std::size_t i : m.subset_b) in_b[i] = 1;

    MeasureCheck c;
    for (std::size_t i = 0; i < m.weights.size(); ++i) {
        const double w = m.weights[i];
        if (in_a[i]) c.mu_a += w;
        if (in_b[i]) c.mu_b += w;
        if (in_a[i] || in_b[i]) c.mu_union += w;
        if (in_a[i] && in_b[i]) c.mu_intersection += w;
    }
    // Sums taken in different orders may disagree in the last bits.
    constexpr double slack = 1e-12;
    c.union_ok = c.mu_union <= c.mu_a + c.mu_b + slack;
    c.cap_a_ok = c.mu_intersection <= c.mu_a + slack;
    c.cap_b_ok = c.mu_intersection <= c.mu_b + slack;
    return c;
}

ConjunctionReport conjunction_report(const ConjunctionDataset& d) {
    validate(d);
    ConjunctionReport r;
    r.dataset = d;
    r.exact_a = relative_frequency(d.record_a);
    r.exact_b = relative_frequency(d.record_b);
    r.exact_ab = relative_frequency(d.record_ab);
    r.probabilities = {to_double(r.exact_a), to_double(r.exact_b), to_double(r.exact_ab)};
    r.verdict = classify_overextension(r.exact_a, r.exact_b, r.exact_ab);
    r.kolmogorov = kolmogorov_interval(r.probabilities.p_a, r.probabilities.p_b);

    const Rational zero = 0;
    const Rational lo = std::max(zero, Rational(r.exact_a + r.exact_b - 1));
    const Rational hi = std::min(r.exact_a, r.exact_b);
    r.below_lower = r.exact_ab < lo;
    r.above_upper = r.exact_ab > hi;
    return r;
}

}  // namespace qcog
