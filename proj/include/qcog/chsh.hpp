#pragma once

#include "qcog/ingest.hpp"
#include "qcog/rational.hpp"

#include <array>

namespace qcog {

/// Cell probabilities of one coincidence experiment, indexed 11, 12, 21, 22.
/// Raw cells are per-query relative frequencies and need not sum to 1.
struct JointProbabilities {
    std::array<Rational, 4> cells;
    bool normalized = false;

    const Rational& p11() const { return cells[0]; }
    const Rational& p12() const { return cells[1]; }
    const Rational& p21() const { return cells[2]; }
    const Rational& p22() const { return cells[3]; }

    std::array<double, 4> as_double() const;
};

/// Converts doubles exactly (every finite double is a dyadic rational).
JointProbabilities make_joint(double p11, double p12, double p21, double p22, bool normalized = false);

JointProbabilities raw_joint(const CoincidenceDataset& dataset);

struct Normalized {
    JointProbabilities joint;
    Rational sum;  // the normalization sum of the raw cells
};

/// Divides every cell by the cell sum. Throws DegenerateError when the sum is 0.
Normalized normalize(const JointProbabilities& joint);

/// p11 - p12 - p21 + p22: outcome 1 of either setting counts +1, outcome 2
/// counts -1, and a joint outcome scores the product. Throws DomainError if
/// `joint` is not normalized.
Rational expectation(const JointProbabilities& joint);

struct ExpectationSet {
    double e_ab = 0.0;
    double e_abp = 0.0;
    double e_apb = 0.0;
    double e_apbp = 0.0;

    double operator[](SettingPair pair) const;
    double& operator[](SettingPair pair);
};

/// Throws DomainError if any value lies outside [-1, 1] (with 1e-12 slack).
void validate(const ExpectationSet& es);

enum class ChshVerdict { classical, quantum_violation, superquantum };

const char* to_string(ChshVerdict verdict);

/// Classical iff |s| <= 2, quantum iff 2 < |s| <= 2√2, superquantum above.
ChshVerdict classify_chsh(double s);
ChshVerdict classify_chsh(const Rational& s);

struct ChshResult {
    double s_value = 0.0;
    ChshVerdict verdict = ChshVerdict::classical;
    ExpectationSet expectations;
    std::array<double, 4> normalization_sums{};  // AB, AB', A'B, A'B'
};

/// s = E(A',B') + E(A,B') + E(A',B) - E(A,B).
double chsh_value(const ExpectationSet& es);
ChshResult chsh_statistic(const ExpectationSet& es);

/// Flipping the outcome labels of a setting negates the two E values that
/// involve it.
ExpectationSet relabel(const ExpectationSet& es, bool flip_a, bool flip_ap, bool flip_b, bool flip_bp);

/// Largest s over all outcome relabelings.
double max_chsh(const ExpectationSet& es);

/// With A' = A and B' = B the CHSH expression collapses to 2E. Throws
/// DomainError unless e is in [-1, 1].
double degenerate_identity_check(double e);

/// Intermediate values for one experiment of a suite.
struct ExperimentTrace {
    SettingPair pair = SettingPair::AB;
    JointProbabilities raw;
    Normalized normalized;
    Rational expectation;
};

struct SuiteResult {
    ChshResult result;
    std::array<ExperimentTrace, 4> experiments;  // in kSettingPairs order
    Rational s_exact;
};

/// raw_joint -> normalize -> expectation for each experiment, then the CHSH
/// statistic, in exact arithmetic throughout.
SuiteResult run_suite(const ChshSuite& suite);

}  // namespace qcog
