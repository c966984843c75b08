#include "qcog/born2d.hpp"

#include "qcog/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qcog {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

}  // namespace

double angle_from_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability must lie in [0, 1]");
    return std::acos(std::sqrt(p)) * kDegPerRad;
}

double probability_from_angle(double theta_degrees) {
    const double c = std::cos(theta_degrees / kDegPerRad);
    return c * c;
}

BornFit fit_item(std::string item_label, double p_a, double p_ab, double p_b, std::string label_a,
                 std::string label_ab, std::string label_b) {
    BornFit fit;
    fit.item_label = std::move(item_label);
    fit.entries = {BornEntry{std::move(label_a), p_a, angle_from_probability(p_a)},
                   BornEntry{std::move(label_ab), p_ab, angle_from_probability(p_ab)},
                   BornEntry{std::move(label_b), p_b, angle_from_probability(p_b)}};
    return fit;
}

std::string caption(const BornFit& fit, int decimals) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(decimals);
    for (std::size_t i = 0; i < fit.entries.size(); ++i) {
        if (i) os << ", ";
        os << "θ(" << fit.item_label << "," << fit.entries[i].label << ") = " << fit.entries[i].angle_degrees << "°";
    }
    return os.str();
}

}  // namespace qcog
