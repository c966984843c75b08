#include "qcog/ingest.hpp"

#include "csv.hpp"
#include "qcog/error.hpp"

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace qcog {

using nlohmann::json;

namespace {

bool valid_iso_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    auto num = [&](std::size_t pos, std::size_t len, int& out) {
        auto first = s.data() + pos;
        auto [ptr, ec] = std::from_chars(first, first + len, out);
        return ec == std::errc{} && ptr == first + len;
    };
    int y = 0, m = 0, d = 0;
    if (!num(0, 4, y) || !num(5, 2, m) || !num(8, 2, d)) return false;
    std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                    std::chrono::day{static_cast<unsigned>(d)}};
    return ymd.ok();
}

std::string describe(const CountRecord& r) {
    return "record '" + r.query + "' (" + std::to_string(r.positives) + "/" + std::to_string(r.total) + ")";
}

std::int64_t parse_count(const std::string& field, const char* name, std::size_t line) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line, std::string(name) + " is not an integer: '" + field + "'");
    return value;
}

double parse_probability(const std::string& field, const char* name, std::size_t line) {
    // std::from_chars for double is not available everywhere yet.
    std::istringstream is(field);
    is.imbue(std::locale::classic());
    double value = 0.0;
    is >> value;
    if (field.empty() || is.fail() || !is.eof())
        throw ParseError(line, std::string(name) + " is not a number: '" + field + "'");
    return value;
}

}  // namespace

void validate(const CountRecord& record) {
    if (record.total < 1) throw ValidationError(describe(record) + ": total must be at least 1");
    if (record.positives < 0) throw ValidationError(describe(record) + ": positives must be non-negative");
    if (record.positives > record.total)
        throw ValidationError(describe(record) + ": positives exceed total");
    if (record.date && !valid_iso_date(*record.date))
        throw ValidationError(describe(record) + ": date '" + *record.date + "' is not YYYY-MM-DD");
}

Rational relative_frequency(const CountRecord& record) {
    validate(record);
    return Rational(record.positives, record.total);
}

void validate(const ConjunctionDataset& d) {
    for (const CountRecord* r : {&d.record_a, &d.record_b, &d.record_ab}) {
        validate(*r);
        if (r->sign != d.sign)
            throw ValidationError(describe(*r) + ": sign '" + r->sign + "' differs from dataset sign '" + d.sign + "'");
    }
}

void validate(const CoincidenceDataset& d) {
    for (const auto& row : d.cells)
        for (const auto& cell : row) validate(cell);
}

const char* key(SettingPair pair) {
    switch (pair) {
        case SettingPair::AB: return "AB";
        case SettingPair::ABp: return "ABp";
        case SettingPair::ApB: return "ApB";
        case SettingPair::ApBp: return "ApBp";
    }
    return "?";
}

const CoincidenceDataset& ChshSuite::at(SettingPair pair) const {
    switch (pair) {
        case SettingPair::AB: return ab;
        case SettingPair::ABp: return abp;
        case SettingPair::ApB: return apb;
        case SettingPair::ApBp: return apbp;
    }
    return ab;
}

CoincidenceDataset& ChshSuite::at(SettingPair pair) {
    return const_cast<CoincidenceDataset&>(std::as_const(*this).at(pair));
}

void validate(const ChshSuite& s) {
    for (auto pair : kSettingPairs) validate(s.at(pair));
    auto same = [](const Setting& x, const Setting& y, const char* what) {
        if (!(x == y))
            throw ConsistencyError(std::string(what) + ": '" + x.name + "' vs '" + y.name + "'");
    };
    same(s.ab.setting_a, s.abp.setting_a, "AB and ABp disagree on setting A");
    same(s.apb.setting_a, s.apbp.setting_a, "ApB and ApBp disagree on setting A'");
    same(s.ab.setting_b, s.apb.setting_b, "AB and ApB disagree on setting B");
    same(s.abp.setting_b, s.apbp.setting_b, "ABp and ApBp disagree on setting B'");
}

// --- conjunction CSV -------------------------------------------------------

namespace {

constexpr const char* kConjunctionHeader = "concept_a,concept_b,sign,role,query,total,positives,date";

struct ConjunctionRow {
    std::size_t line;
    std::string concept_a, concept_b, sign, role;
    CountRecord record;
};

}  // namespace

std::vector<ConjunctionDataset> parse_conjunction(std::istream& in) {
    std::vector<ConjunctionDataset> out;
    std::vector<ConjunctionRow> group;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;

    auto flush = [&](std::size_t at_line) {
        if (group.empty()) return;
        if (group.size() != 3)
            throw ParseError(at_line, "dataset '" + group.front().concept_a + "/" + group.front().concept_b + "/" +
                                          group.front().sign + "' has " + std::to_string(group.size()) +
                                          " rows, expected 3 (roles a, b, ab)");
        ConjunctionDataset d;
        d.concept_a = group[0].concept_a;
        d.concept_b = group[0].concept_b;
        d.sign = group[0].sign;
        std::map<std::string, const ConjunctionRow*> by_role;
        for (const auto& row : group) {
            if (!by_role.emplace(row.role, &row).second)
                throw ParseError(row.line, "duplicate role '" + row.role + "' in dataset");
        }
        for (const auto& row : group) validate(row.record);
        d.record_a = by_role.at("a")->record;
        d.record_b = by_role.at("b")->record;
        d.record_ab = by_role.at("ab")->record;
        validate(d);
        out.push_back(std::move(d));
        group.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        detail::strip_line_ending(line);
        if (line_no == 1) detail::strip_bom(line);
        if (detail::is_blank(line)) continue;
        if (!header_seen) {
            if (line != kConjunctionHeader)
                throw ParseError(line_no, std::string("expected header '") + kConjunctionHeader + "'");
            header_seen = true;
            continue;
        }
        auto f = detail::split_csv_line(line, line_no);
        if (f.size() != 8) throw ParseError(line_no, "expected 8 fields, found " + std::to_string(f.size()));
        ConjunctionRow row;
        row.line = line_no;
        row.concept_a = f[0];
        row.concept_b = f[1];
        row.sign = f[2];
        row.role = f[3];
        if (row.role != "a" && row.role != "b" && row.role != "ab")
            throw ParseError(line_no, "role must be one of a, b, ab; got '" + row.role + "'");
        row.record.query = f[4];
        row.record.total = parse_count(f[5], "total", line_no);
        row.record.positives = parse_count(f[6], "positives", line_no);
        row.record.sign = row.sign;
        if (!f[7].empty()) row.record.date = f[7];

        if (!group.empty()) {
            const auto& g = group.front();
            bool same_key = g.concept_a == row.concept_a && g.concept_b == row.concept_b && g.sign == row.sign;
            if (!same_key || group.size() == 3) flush(line_no);
        }
        group.push_back(std::move(row));
    }
    flush(line_no);
    return out;
}

std::vector<ConjunctionDataset> parse_conjunction_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_conjunction(in);
}

void write_conjunction(std::ostream& out, const std::vector<ConjunctionDataset>& datasets) {
    using detail::quote_csv_field;
    out << kConjunctionHeader << '\n';
    for (const auto& d : datasets) {
        auto row = [&](const char* role, const CountRecord& r) {
            out << quote_csv_field(d.concept_a) << ',' << quote_csv_field(d.concept_b) << ','
                << quote_csv_field(d.sign) << ',' << role << ',' << quote_csv_field(r.query) << ',' << r.total << ','
                << r.positives << ',' << (r.date ? *r.date : "") << '\n';
        };
        row("a", d.record_a);
        row("b", d.record_b);
        row("ab", d.record_ab);
    }
}

// --- Born CSV --------------------------------------------------------------

std::vector<BornInput> parse_born_inputs(std::istream& in) {
    static constexpr const char* kHeader = "item,label_a,label_ab,label_b,p_a,p_ab,p_b";
    std::vector<BornInput> out;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        detail::strip_line_ending(line);
        if (line_no == 1) detail::strip_bom(line);
        if (detail::is_blank(line)) continue;
        if (!header_seen) {
            if (line != kHeader) throw ParseError(line_no, std::string("expected header '") + kHeader + "'");
            header_seen = true;
            continue;
        }
        auto f = detail::split_csv_line(line, line_no);
        if (f.size() != 7) throw ParseError(line_no, "expected 7 fields, found " + std::to_string(f.size()));
        BornInput b{f[0], f[1], f[2], f[3], parse_probability(f[4], "p_a", line_no),
                    parse_probability(f[5], "p_ab", line_no), parse_probability(f[6], "p_b", line_no)};
        for (double p : {b.p_a, b.p_ab, b.p_b})
            if (!(p >= 0.0 && p <= 1.0))
                throw ValidationError("line " + std::to_string(line_no) + ": probability outside [0, 1]");
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<BornInput> parse_born_inputs_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_born_inputs(in);
}

// --- CHSH JSON -------------------------------------------------------------

namespace {

constexpr std::array<const char*, 4> kCellKeys = {"11", "12", "21", "22"};

Setting parse_setting(const json& root, const char* field) {
    if (!root.contains(field)) throw SchemaError(std::string("missing '") + field + "'");
    const json& s = root.at(field);
    if (!s.is_object() || !s.contains("name") || !s.contains("outcomes"))
        throw SchemaError(std::string("'") + field + "' needs 'name' and 'outcomes'");
    const json& o = s.at("outcomes");
    if (!o.is_array() || o.size() != 2 || !o[0].is_string() || !o[1].is_string())
        throw SchemaError(std::string("'") + field + ".outcomes' must hold two labels");
    return Setting{s.at("name").get<std::string>(), {o[0].get<std::string>(), o[1].get<std::string>()}};
}

json setting_json(const Setting& s) { return {{"name", s.name}, {"outcomes", {s.outcomes[0], s.outcomes[1]}}}; }

CountRecord parse_cell(const json& cell, const std::string& where, const std::string& sign) {
    if (!cell.is_object()) throw SchemaError(where + " must be an object");
    for (const char* f : {"query", "total", "positives"})
        if (!cell.contains(f)) throw SchemaError(where + " lacks '" + f + "'");
    if (!cell.at("query").is_string()) throw SchemaError(where + ".query must be a string");
    if (!cell.at("total").is_number_integer() || !cell.at("positives").is_number_integer())
        throw SchemaError(where + ": total and positives must be integers");
    CountRecord r;
    r.query = cell.at("query").get<std::string>();
    r.total = cell.at("total").get<std::int64_t>();
    r.positives = cell.at("positives").get<std::int64_t>();
    r.sign = sign;
    if (cell.contains("date") && !cell.at("date").is_null()) r.date = cell.at("date").get<std::string>();
    validate(r);
    return r;
}

}  // namespace

namespace {

ChshSuite suite_from_json(const json& root);

}  // namespace

ChshSuite parse_chsh_suite_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    try {
        return suite_from_json(root);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed CHSH suite: ") + e.what());
    }
}

namespace {

ChshSuite suite_from_json(const json& root) {
    if (!root.is_object()) throw SchemaError("CHSH suite must be a JSON object");

    const Setting a = parse_setting(root, "setting_a");
    const Setting ap = parse_setting(root, "setting_a_prime");
    const Setting b = parse_setting(root, "setting_b");
    const Setting bp = parse_setting(root, "setting_b_prime");
    if (!root.contains("experiments") || !root.at("experiments").is_object())
        throw SchemaError("missing 'experiments' object");
    const json& experiments = root.at("experiments");

    ChshSuite suite;
    for (auto pair : kSettingPairs) {
        const std::string k = key(pair);
        if (!experiments.contains(k)) throw SchemaError("missing experiment " + k);
        const json& e = experiments.at(k);
        if (!e.is_object()) throw SchemaError("experiment " + k + " must be an object");
        CoincidenceDataset& d = suite.at(pair);
        const bool primed_a = pair == SettingPair::ApB || pair == SettingPair::ApBp;
        const bool primed_b = pair == SettingPair::ABp || pair == SettingPair::ApBp;
        d.setting_a = primed_a ? ap : a;
        d.setting_b = primed_b ? bp : b;
        // Experiments may restate their setting names; they must agree.
        if (e.contains("setting_a") && e.at("setting_a").get<std::string>() != d.setting_a.name)
            throw ConsistencyError("experiment " + k + " names setting_a '" + e.at("setting_a").get<std::string>() +
                                   "', expected '" + d.setting_a.name + "'");
        if (e.contains("setting_b") && e.at("setting_b").get<std::string>() != d.setting_b.name)
            throw ConsistencyError("experiment " + k + " names setting_b '" + e.at("setting_b").get<std::string>() +
                                   "', expected '" + d.setting_b.name + "'");
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const char* ck = kCellKeys[2 * i + j];
                const std::string where = "(" + k + ", " + ck + ")";
                const json* cell = nullptr;
                if (e.contains("cells") && e.at("cells").is_object() && e.at("cells").contains(ck))
                    cell = &e.at("cells").at(ck);
                else if (e.contains(ck))
                    cell = &e.at(ck);
                if (!cell) throw SchemaError("missing cell " + where);
                const std::string sign = d.setting_a.outcomes[i] + " " + d.setting_b.outcomes[j];
                d.cells[i][j] = parse_cell(*cell, "cell " + where, sign);
            }
    }
    validate(suite);
    return suite;
}

}  // namespace

ChshSuite parse_chsh_suite(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_chsh_suite_text(ss.str());
}

ChshSuite parse_chsh_suite_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_chsh_suite(in);
}

std::string write_chsh_suite(const ChshSuite& suite) {
    validate(suite);
    json root;
    root["setting_a"] = setting_json(suite.ab.setting_a);
    root["setting_a_prime"] = setting_json(suite.apbp.setting_a);
    root["setting_b"] = setting_json(suite.ab.setting_b);
    root["setting_b_prime"] = setting_json(suite.apbp.setting_b);
    json experiments = json::object();
    for (auto pair : kSettingPairs) {
        const auto& d = suite.at(pair);
        json e = json::object();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const auto& r = d.cells[i][j];
                json cell = {{"query", r.query}, {"total", r.total}, {"positives", r.positives}};
                if (r.date) cell["date"] = *r.date;
                e[kCellKeys[2 * i + j]] = cell;
            }
        experiments[key(pair)] = e;
    }
    root["experiments"] = experiments;
    return root.dump(2);
}

}  // namespace qcog
