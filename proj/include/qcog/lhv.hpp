#pragma once

#include "qcog/chsh.hpp"

#include <array>
#include <vector>

namespace qcog {

/// Predetermined ±1 outcomes for all four settings.
struct DeterministicStrategy {
    int a = 1;
    int a_prime = 1;
    int b = 1;
    int b_prime = 1;

    friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

std::vector<DeterministicStrategy> enumerate_strategies();

struct IntExpectations {
    int e_ab = 0;
    int e_abp = 0;
    int e_apb = 0;
    int e_apbp = 0;
};

IntExpectations strategy_expectations_exact(const DeterministicStrategy& st);
ExpectationSet strategy_expectations(const DeterministicStrategy& st);

/// max over all deterministic strategies of |s|, in integer arithmetic.
int lhv_chsh_bound();

/// A CHSH-type facet: signs applied to (E_AB, E_AB', E_A'B, E_A'B'), with an
/// odd number of minus signs.
struct Facet {
    std::array<int, 4> signs{};
    double value = 0.0;
};

/// The eight facets of the local correlation polytope.
std::vector<std::array<int, 4>> facet_signs();

struct MembershipReport {
    bool member = true;
    std::vector<Facet> facets;           // all eight, evaluated
    std::vector<Facet> violated_facets;  // those with value > 2
};

inline constexpr double kFacetTolerance = 1e-12;

MembershipReport membership_report(const ExpectationSet& es);
bool local_membership(const ExpectationSet& es);

}  // namespace qcog
