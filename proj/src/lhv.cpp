#include "qcog/lhv.hpp"

#include <algorithm>
#include <cstdlib>

namespace qcog {

std::vector<DeterministicStrategy> enumerate_strategies() {
    std::vector<DeterministicStrategy> out;
    out.reserve(16);
    for (int mask = 0; mask < 16; ++mask) {
        auto bit = [mask](int i) { return (mask >> i) & 1 ? -1 : 1; };
        out.push_back({bit(3), bit(2), bit(1), bit(0)});
    }
    return out;
}

IntExpectations strategy_expectations_exact(const DeterministicStrategy& st) {
    return {st.a * st.b, st.a * st.b_prime, st.a_prime * st.b, st.a_prime * st.b_prime};
}

ExpectationSet strategy_expectations(const DeterministicStrategy& st) {
    const auto e = strategy_expectations_exact(st);
    return {double(e.e_ab), double(e.e_abp), double(e.e_apb), double(e.e_apbp)};
}

int lhv_chsh_bound() {
    int best = 0;
    for (const auto& st : enumerate_strategies()) {
        const auto e = strategy_expectations_exact(st);
        best = std::max(best, std::abs(e.e_apbp + e.e_abp + e.e_apb - e.e_ab));
    }
    return best;
}

std::vector<std::array<int, 4>> facet_signs() {
    std::vector<std::array<int, 4>> out;
    for (int mask = 0; mask < 16; ++mask) {
        std::array<int, 4> s{};
        int minus = 0;
        for (int i = 0; i < 4; ++i) {
            s[i] = (mask >> (3 - i)) & 1 ? -1 : 1;
            minus += s[i] < 0;
        }
        if (minus % 2 == 1) out.push_back(s);
    }
    return out;
}

MembershipReport membership_report(const ExpectationSet& es) {
    validate(es);
    MembershipReport r;
    const std::array<double, 4> e = {es.e_ab, es.e_abp, es.e_apb, es.e_apbp};
    for (const auto& signs : facet_signs()) {
        Facet f{signs, 0.0};
        for (int i = 0; i < 4; ++i) f.value += signs[i] * e[i];
        if (f.value > 2.0 + kFacetTolerance) r.violated_facets.push_back(f);
        r.facets.push_back(f);
    }
    r.member = r.violated_facets.empty();
    return r;
}

bool local_membership(const ExpectationSet& es) { return membership_report(es).member; }

}  // namespace qcog
