#pragma once

#include "qcog/born2d.hpp"
#include "qcog/chsh.hpp"
#include "qcog/classical.hpp"
#include "qcog/entfit.hpp"
#include "qcog/lhv.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <optional>
#include <string>

namespace qcog {

using nlohmann::json;

/// Rounded values reported alongside a CHSH data set, for side-by-side
/// comparison with the recomputed ones. Read from the optional `reference`
/// object of a CHSH suite file.
struct PublishedChsh {
    std::array<std::optional<double>, 4> sums;          // AB, ABp, ApB, ApBp
    std::array<std::optional<double>, 4> expectations;  // same order
    std::optional<double> s;
};

std::optional<PublishedChsh> parse_published(const json& suite_root);

/// Reads {"e_ab", "e_abp", "e_apb", "e_apbp"}, or runs a full CHSH suite file
/// when the document has `experiments`.
ExpectationSet parse_expectation_set(const json& root);
ExpectationSet read_expectation_input(const std::filesystem::path& path);

json to_json(const CountRecord& record);
json to_json(const ConjunctionReport& report);
json to_json(const BornFit& fit);
json to_json(const ExpectationSet& es);
json to_json(const SuiteResult& result, const ChshSuite& suite);
json to_json(const MembershipReport& report);
json to_json(const FitResult& fit);

std::string fixed(double value, int precision);

std::string to_text(const ConjunctionReport& report, int precision);
std::string to_text(const BornFit& fit, int precision);
std::string to_text(const SuiteResult& result, const ChshSuite& suite, int precision,
                    const std::optional<PublishedChsh>& published = std::nullopt);
std::string to_text(const MembershipReport& report, int precision);
std::string to_text(const FitResult& fit, int precision);

}  // namespace qcog
