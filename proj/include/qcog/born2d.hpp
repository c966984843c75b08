#pragma once

#include <array>
#include <string>

namespace qcog {

/// Born rule in the real plane: P = cos^2(theta). Returns arccos(sqrt(p)) in
/// degrees, the principal value in [0, 90]. Throws DomainError unless
/// p is in [0, 1].
double angle_from_probability(double p);

/// cos^2(theta) for theta in degrees.
double probability_from_angle(double theta_degrees);

struct BornEntry {
    std::string label;
    double probability = 0.0;
    double angle_degrees = 0.0;
};

/// Two-dimensional vector model of one exemplar X against A, A∩B and B.
/// entries are stored in that order.
struct BornFit {
    std::string item_label;
    std::array<BornEntry, 3> entries;

    const BornEntry& a() const { return entries[0]; }
    const BornEntry& ab() const { return entries[1]; }
    const BornEntry& b() const { return entries[2]; }
};

BornFit fit_item(std::string item_label, double p_a, double p_ab, double p_b,
                 std::string label_a = "A", std::string label_ab = "A∩B", std::string label_b = "B");

/// "θ(X,A) = 77.08°, θ(X,A∩B) = 50.77°, θ(X,B) = 33.21°", X replaced by the item label.
std::string caption(const BornFit& fit, int decimals = 2);

}  // namespace qcog
