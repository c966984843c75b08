#pragma once

#include "qcog/rational.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qcog {

/// One annotated image-search tally: `positives` of the `total` images
/// inspected for `query` showed `sign`.
struct CountRecord {
    std::string query;
    std::int64_t total = 1;
    std::int64_t positives = 0;
    std::string sign;
    std::optional<std::string> date;  // ISO-8601, metadata only

    friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

/// Throws ValidationError naming the record when total < 1 or positives is
/// outside [0, total], and when a present date is not YYYY-MM-DD.
void validate(const CountRecord& record);

/// positives / total, exact.
Rational relative_frequency(const CountRecord& record);

/// Conjunct A, conjunct B and the conjunction "A and B", all annotated with
/// the same sign.
struct ConjunctionDataset {
    std::string concept_a;
    std::string concept_b;
    std::string sign;
    CountRecord record_a;
    CountRecord record_b;
    CountRecord record_ab;

    friend bool operator==(const ConjunctionDataset&, const ConjunctionDataset&) = default;
};

void validate(const ConjunctionDataset& dataset);

/// A measurement setting with its two outcomes, e.g. Horse/Bear.
struct Setting {
    std::string name;
    std::array<std::string, 2> outcomes;

    friend bool operator==(const Setting&, const Setting&) = default;
};

/// Joint measurement of two settings. cells[i][j] tallies outcome i of
/// setting_a together with outcome j of setting_b (0-based here, "11".."22"
/// on disk).
struct CoincidenceDataset {
    Setting setting_a;
    Setting setting_b;
    std::array<std::array<CountRecord, 2>, 2> cells;

    friend bool operator==(const CoincidenceDataset&, const CoincidenceDataset&) = default;
};

void validate(const CoincidenceDataset& dataset);

enum class SettingPair { AB, ABp, ApB, ApBp };

inline constexpr std::array<SettingPair, 4> kSettingPairs = {
    SettingPair::AB, SettingPair::ABp, SettingPair::ApB, SettingPair::ApBp};

/// "AB", "ABp", "ApB" or "ApBp".
const char* key(SettingPair pair);

/// The four coincidence experiments of a CHSH test.
struct ChshSuite {
    CoincidenceDataset ab;
    CoincidenceDataset abp;
    CoincidenceDataset apb;
    CoincidenceDataset apbp;

    const CoincidenceDataset& at(SettingPair pair) const;
    CoincidenceDataset& at(SettingPair pair);

    friend bool operator==(const ChshSuite&, const ChshSuite&) = default;
};

/// Validates every cell and that experiments sharing a setting agree on it.
/// Throws ConsistencyError on a mismatch.
void validate(const ChshSuite& suite);

// Conjunction CSV: header `concept_a,concept_b,sign,role,query,total,positives,date`,
// three consecutive rows (roles a, b, ab in any order) per dataset.
std::vector<ConjunctionDataset> parse_conjunction(std::istream& in);
std::vector<ConjunctionDataset> parse_conjunction_file(const std::filesystem::path& path);
void write_conjunction(std::ostream& out, const std::vector<ConjunctionDataset>& datasets);

/// One row of a Born-fit input: an exemplar and its probabilities for A,
/// A∩B and B.
struct BornInput {
    std::string item;
    std::string label_a;
    std::string label_ab;
    std::string label_b;
    double p_a = 0.0;
    double p_ab = 0.0;
    double p_b = 0.0;
};

// Born CSV: header `item,label_a,label_ab,label_b,p_a,p_ab,p_b`.
std::vector<BornInput> parse_born_inputs(std::istream& in);
std::vector<BornInput> parse_born_inputs_file(const std::filesystem::path& path);

// CHSH JSON: settings at the top level, `experiments` keyed AB/ABp/ApB/ApBp,
// each with cells keyed 11/12/21/22.
ChshSuite parse_chsh_suite(std::istream& in);
ChshSuite parse_chsh_suite_text(const std::string& text);
ChshSuite parse_chsh_suite_file(const std::filesystem::path& path);
std::string write_chsh_suite(const ChshSuite& suite);

}  // namespace qcog
