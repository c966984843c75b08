#include "qcog/chsh.hpp"

#include "qcog/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcog {

std::array<double, 4> JointProbabilities::as_double() const {
    return {to_double(cells[0]), to_double(cells[1]), to_double(cells[2]), to_double(cells[3])};
}

JointProbabilities make_joint(double p11, double p12, double p21, double p22, bool normalized) {
    JointProbabilities jp;
    const std::array<double, 4> in = {p11, p12, p21, p22};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(in[i] >= 0.0 && in[i] <= 1.0)) throw DomainError("cell probability outside [0, 1]");
        jp.cells[i] = Rational(in[i]);
    }
    jp.normalized = normalized;
    if (normalized) {
        const double sum = p11 + p12 + p21 + p22;
        if (std::abs(sum - 1.0) > 1e-9) throw DomainError("normalized cells must sum to 1");
    }
    return jp;
}

JointProbabilities raw_joint(const CoincidenceDataset& d) {
    validate(d);
    JointProbabilities jp;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) jp.cells[2 * i + j] = relative_frequency(d.cells[i][j]);
    return jp;
}

Normalized normalize(const JointProbabilities& joint) {
    Normalized n;
    n.sum = joint.cells[0] + joint.cells[1] + joint.cells[2] + joint.cells[3];
    if (n.sum <= 0) throw DegenerateError("degenerate experiment: no cell was observed");
    for (std::size_t i = 0; i < 4; ++i) n.joint.cells[i] = joint.cells[i] / n.sum;
    n.joint.normalized = true;
    return n;
}

Rational expectation(const JointProbabilities& joint) {
    if (!joint.normalized) throw DomainError("expectation needs normalized joint probabilities");
    return joint.p11() - joint.p12() - joint.p21() + joint.p22();
}

double ExpectationSet::operator[](SettingPair pair) const {
    switch (pair) {
        case SettingPair::AB: return e_ab;
        case SettingPair::ABp: return e_abp;
        case SettingPair::ApB: return e_apb;
        case SettingPair::ApBp: return e_apbp;
    }
    return 0.0;
}

double& ExpectationSet::operator[](SettingPair pair) {
    switch (pair) {
        case SettingPair::AB: return e_ab;
        case SettingPair::ABp: return e_abp;
        case SettingPair::ApB: return e_apb;
        case SettingPair::ApBp: break;
    }
    return e_apbp;
}

void validate(const ExpectationSet& es) {
    for (auto pair : kSettingPairs) {
        const double e = es[pair];
        if (!(std::abs(e) <= 1.0 + 1e-12))
            throw DomainError(std::string("E(") + key(pair) + ") outside [-1, 1]");
    }
}

const char* to_string(ChshVerdict verdict) {
    switch (verdict) {
        case ChshVerdict::classical: return "classical";
        case ChshVerdict::quantum_violation: return "quantum_violation";
        case ChshVerdict::superquantum: return "superquantum";
    }
    return "?";
}

ChshVerdict classify_chsh(double s) {
    // Floating-point inputs get 1e-12 of slack at each threshold so that
    // boundary configurations land on the inclusive side.
    constexpr double slack = 1e-12;
    const double m = std::abs(s);
    if (m <= 2.0 + slack) return ChshVerdict::classical;
    if (m <= 2.0 * std::numbers::sqrt2 + slack) return ChshVerdict::quantum_violation;
    return ChshVerdict::superquantum;
}

ChshVerdict classify_chsh(const Rational& s) {
    const Rational m = abs(s);
    if (m <= 2) return ChshVerdict::classical;
    if (m * m <= 8) return ChshVerdict::quantum_violation;
    return ChshVerdict::superquantum;
}

double chsh_value(const ExpectationSet& es) { return es.e_apbp + es.e_abp + es.e_apb - es.e_ab; }

ChshResult chsh_statistic(const ExpectationSet& es) {
    validate(es);
    ChshResult r;
    r.expectations = es;
    r.s_value = chsh_value(es);
    r.verdict = classify_chsh(r.s_value);
    return r;
}

ExpectationSet relabel(const ExpectationSet& es, bool flip_a, bool flip_ap, bool flip_b, bool flip_bp) {
    auto sign = [](bool x, bool y) { return (x != y) ? -1.0 : 1.0; };
    return {sign(flip_a, flip_b) * es.e_ab, sign(flip_a, flip_bp) * es.e_abp, sign(flip_ap, flip_b) * es.e_apb,
            sign(flip_ap, flip_bp) * es.e_apbp};
}

double max_chsh(const ExpectationSet& es) {
    double best = -4.0;
    for (int mask = 0; mask < 16; ++mask)
        best = std::max(best, chsh_value(relabel(es, mask & 1, mask & 2, mask & 4, mask & 8)));
    return best;
}

double degenerate_identity_check(double e) {
    if (!(std::abs(e) <= 1.0)) throw DomainError("expectation value outside [-1, 1]");
    return 2.0 * e;
}

SuiteResult run_suite(const ChshSuite& suite) {
    validate(suite);
    SuiteResult out;
    for (std::size_t k = 0; k < kSettingPairs.size(); ++k) {
        const SettingPair pair = kSettingPairs[k];
        ExperimentTrace& t = out.experiments[k];
        t.pair = pair;
        t.raw = raw_joint(suite.at(pair));
        try {
            t.normalized = normalize(t.raw);
        } catch (const DegenerateError&) {
            throw DegenerateError(std::string("degenerate experiment ") + key(pair) + ": no cell was observed");
        }
        t.expectation = expectation(t.normalized.joint);
        out.result.expectations[pair] = to_double(t.expectation);
        out.result.normalization_sums[k] = to_double(t.normalized.sum);
    }
    const auto& e = out.experiments;
    out.s_exact = e[3].expectation + e[1].expectation + e[2].expectation - e[0].expectation;
    out.result.s_value = to_double(out.s_exact);
    out.result.verdict = classify_chsh(out.s_exact);
    return out;
}

}  // namespace qcog
