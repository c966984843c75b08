#include "qcog/report.hpp"

#include "qcog/error.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qcog {

namespace {

constexpr std::array<const char*, 4> kPairLabels = {"A,B", "A,B′", "A′,B", "A′,B′"};

double round_to(double x, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(x * scale) / scale;
}

std::optional<double> optional_number(const json& obj, const char* k) {
    if (obj.is_object() && obj.contains(k) && obj.at(k).is_number()) return obj.at(k).get<double>();
    return std::nullopt;
}

json signs_json(const std::array<int, 4>& s) { return json::array({s[0], s[1], s[2], s[3]}); }

}  // namespace

std::string fixed(double value, int precision) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(precision);
    // Avoid printing "-0.0000".
    if (round_to(value, precision) == 0.0) value = 0.0;
    os << value;
    return os.str();
}

std::optional<PublishedChsh> parse_published(const json& root) {
    if (!root.is_object() || !root.contains("reference")) return std::nullopt;
    const json& ref = root.at("reference");
    PublishedChsh p;
    for (std::size_t k = 0; k < 4; ++k) {
        const char* name = key(kSettingPairs[k]);
        if (ref.contains("S")) p.sums[k] = optional_number(ref.at("S"), name);
        if (ref.contains("E")) p.expectations[k] = optional_number(ref.at("E"), name);
    }
    p.s = optional_number(ref, "s");
    return p;
}

ExpectationSet parse_expectation_set(const json& root) {
    if (root.is_object() && root.contains("experiments")) return run_suite(parse_chsh_suite_text(root.dump())).result.expectations;
    if (!root.is_object()) throw SchemaError("expectation set must be a JSON object");
    ExpectationSet es;
    for (auto pair : kSettingPairs) {
        const std::string k = std::string("e_") + (pair == SettingPair::AB    ? "ab"
                                                   : pair == SettingPair::ABp ? "abp"
                                                   : pair == SettingPair::ApB ? "apb"
                                                                              : "apbp");
        if (!root.contains(k) || !root.at(k).is_number()) throw SchemaError("missing numeric '" + k + "'");
        es[pair] = root.at(k).get<double>();
    }
    validate(es);
    return es;
}

ExpectationSet read_expectation_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return parse_expectation_set(root);
}

// --- JSON ------------------------------------------------------------------

json to_json(const CountRecord& r) {
    json j = {{"query", r.query}, {"total", r.total}, {"positives", r.positives}};
    if (r.date) j["date"] = *r.date;
    return j;
}

json to_json(const ConjunctionReport& r) {
    const auto& d = r.dataset;
    return {
        {"concept_a", d.concept_a},
        {"concept_b", d.concept_b},
        {"sign", d.sign},
        {"records", {{"a", to_json(d.record_a)}, {"b", to_json(d.record_b)}, {"ab", to_json(d.record_ab)}}},
        {"probabilities",
         {{"p_a", r.probabilities.p_a}, {"p_b", r.probabilities.p_b}, {"p_ab", r.probabilities.p_ab}}},
        {"exact", {{"p_a", to_string(r.exact_a)}, {"p_b", to_string(r.exact_b)}, {"p_ab", to_string(r.exact_ab)}}},
        {"verdict", {{"kind", to_string(r.verdict.kind)}, {"margins", {r.verdict.margin_a, r.verdict.margin_b}}}},
        {"kolmogorov_interval", {r.kolmogorov.lo, r.kolmogorov.hi}},
        {"violation", {{"any", r.violation()}, {"below_lower", r.below_lower}, {"above_upper", r.above_upper}}},
    };
}

json to_json(const BornFit& fit) {
    json entries = json::array();
    for (const auto& e : fit.entries)
        entries.push_back({{"label", e.label},
                           {"probability", e.probability},
                           {"angle_degrees", e.angle_degrees},
                           {"angle_display", fixed(e.angle_degrees, 2)}});
    return {{"item", fit.item_label}, {"entries", entries}, {"caption", caption(fit)}};
}

json to_json(const ExpectationSet& es) {
    return {{"e_ab", es.e_ab}, {"e_abp", es.e_abp}, {"e_apb", es.e_apb}, {"e_apbp", es.e_apbp}};
}

json to_json(const SuiteResult& r, const ChshSuite& suite) {
    json experiments = json::object();
    for (const auto& t : r.experiments) {
        const auto& d = suite.at(t.pair);
        json raw_exact = json::array(), norm_exact = json::array();
        for (const auto& c : t.raw.cells) raw_exact.push_back(to_string(c));
        for (const auto& c : t.normalized.joint.cells) norm_exact.push_back(to_string(c));
        json cells = json::object();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) cells[std::to_string(10 * (i + 1) + j + 1)] = to_json(d.cells[i][j]);
        experiments[key(t.pair)] = {
            {"setting_a", d.setting_a.name},
            {"setting_b", d.setting_b.name},
            {"cells", cells},
            {"raw", t.raw.as_double()},
            {"raw_exact", raw_exact},
            {"S", to_double(t.normalized.sum)},
            {"S_exact", to_string(t.normalized.sum)},
            {"normalized", t.normalized.joint.as_double()},
            {"normalized_exact", norm_exact},
            {"E", to_double(t.expectation)},
            {"E_exact", to_string(t.expectation)},
        };
    }
    return {
        {"experiments", experiments},
        {"expectations", to_json(r.result.expectations)},
        {"normalization_sums", r.result.normalization_sums},
        {"s", r.result.s_value},
        {"s_exact", to_string(r.s_exact)},
        {"verdict", to_string(r.result.verdict)},
    };
}

json to_json(const MembershipReport& r) {
    json violated = json::array(), facets = json::array();
    for (const auto& f : r.violated_facets) violated.push_back({{"signs", signs_json(f.signs)}, {"value", f.value}});
    for (const auto& f : r.facets) facets.push_back({{"signs", signs_json(f.signs)}, {"value", f.value}});
    return {{"member", r.member}, {"violated_facets", violated}, {"facets", facets}};
}

json to_json(const FitResult& fit) {
    const auto& a = fit.angles;
    const ExpectationSet model = model_expectations(a);
    return {
        {"angles",
         {{"alpha_a", round_to(a.alpha_a, 12)},
          {"alpha_ap", round_to(a.alpha_ap, 12)},
          {"beta_b", round_to(a.beta_b, 12)},
          {"beta_bp", round_to(a.beta_bp, 12)}}},
        {"residual", fit.residual},
        {"evaluations", fit.evaluations},
        {"converged", fit.converged},
        {"model_expectations", to_json(model)},
        {"model_s", chsh_value(model)},
    };
}

// --- text ------------------------------------------------------------------

std::string to_text(const ConjunctionReport& r, int precision) {
    const auto& d = r.dataset;
    const std::string ab = d.concept_a + " and " + d.concept_b;
    std::ostringstream os;
    auto line = [&](const std::string& concept_name, const CountRecord& rec, const Rational& exact) {
        os << "  P_" << d.sign << "(" << concept_name << ") = n(" << d.sign << ", " << concept_name << ") / n("
           << concept_name << ") = " << rec.positives << "/" << rec.total << " ≈ " << fixed(to_double(exact), precision)
           << '\n';
    };
    os << d.sign << ": " << d.concept_a << ", " << d.concept_b << ", " << ab << '\n';
    line(d.concept_a, d.record_a, r.exact_a);
    line(d.concept_b, d.record_b, r.exact_b);
    line(ab, d.record_ab, r.exact_ab);
    auto cmp = [&](double margin, const std::string& other) {
        const char* op = margin > 0 ? ">" : "≤";
        os << "P(" << ab << ") " << op << " P(" << other << ")";
    };
    os << "  ";
    cmp(r.verdict.margin_a, d.concept_a);
    os << "   ";
    cmp(r.verdict.margin_b, d.concept_b);
    os << '\n';
    os << "  classical interval for P(" << ab << "): [" << fixed(r.kolmogorov.lo, precision) << ", "
       << fixed(r.kolmogorov.hi, precision) << "]" << (r.violation() ? "  VIOLATED" : "  satisfied") << '\n';
    os << "  overextension: ";
    switch (r.verdict.kind) {
        case Overextension::none: os << "none"; break;
        case Overextension::single_over_a: os << "single (over " << d.concept_a << ")"; break;
        case Overextension::single_over_b: os << "single (over " << d.concept_b << ")"; break;
        case Overextension::double_: os << "double overextension"; break;
    }
    os << '\n';
    return os.str();
}

std::string to_text(const BornFit& fit, int precision) {
    std::ostringstream os;
    os << fit.item_label << '\n';
    for (const auto& e : fit.entries)
        os << "  P(" << e.label << ") = " << fixed(e.probability, precision) << "  θ(" << fit.item_label << ","
           << e.label << ") = arccos √P = " << fixed(e.angle_degrees, 2) << "°\n";
    os << "  " << caption(fit) << '\n';
    return os.str();
}

std::string to_text(const SuiteResult& r, const ChshSuite& suite, int precision,
                    const std::optional<PublishedChsh>& published) {
    std::ostringstream os;
    auto pub = [&](const std::optional<double>& v) {
        if (v) os << "   [published " << *v << "]";
    };
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& t = r.experiments[k];
        const auto& d = suite.at(t.pair);
        const std::string pl = kPairLabels[k];
        os << "e(" << pl << "): " << d.setting_a.name << " × " << d.setting_b.name << '\n';
        const auto raw = t.raw.as_double();
        const auto nrm = t.normalized.joint.as_double();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const auto& c = d.cells[i][j];
                os << "  𝒫(" << d.setting_a.outcomes[i] << "," << d.setting_b.outcomes[j] << ") = " << c.positives
                   << "/" << c.total << " ≈ " << fixed(raw[2 * i + j], precision) << "   ('" << c.query << "')\n";
            }
        os << "  𝒮(" << pl << ") = " << fixed(to_double(t.normalized.sum), precision);
        if (published) pub(published->sums[k]);
        os << '\n';
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                os << "  P(" << d.setting_a.outcomes[i] << "," << d.setting_b.outcomes[j]
                   << ") = " << fixed(nrm[2 * i + j], precision) << '\n';
        os << "  E(" << pl << ") = P11 − P12 − P21 + P22 = " << fixed(to_double(t.expectation), precision);
        if (published) pub(published->expectations[k]);
        os << "\n\n";
    }
    os << "E(A′,B′) + E(A,B′) + E(A′,B) − E(A,B) = " << fixed(r.result.s_value, precision);
    if (published) pub(published->s);
    os << '\n';
    os << "verdict: " << to_string(r.result.verdict) << " (classical bound 2, quantum bound 2√2 ≈ "
       << fixed(2.0 * std::numbers::sqrt2, precision) << ")\n";
    return os.str();
}

std::string to_text(const MembershipReport& r, int precision) {
    std::ostringstream os;
    os << "local correlation polytope: " << (r.member ? "member" : "NOT a member") << '\n';
    static constexpr std::array<const char*, 4> names = {"E(A,B)", "E(A,B′)", "E(A′,B)", "E(A′,B′)"};
    for (const auto& f : r.facets) {
        os << "  ";
        for (int i = 0; i < 4; ++i) os << (f.signs[i] > 0 ? (i ? " + " : "+") : (i ? " − " : "−")) << names[i];
        os << " = " << fixed(f.value, precision) << (f.value > 2.0 + kFacetTolerance ? "  > 2" : "") << '\n';
    }
    return os.str();
}

std::string to_text(const FitResult& fit, int precision) {
    const ExpectationSet m = model_expectations(fit.angles);
    std::ostringstream os;
    os << "singlet-model fit (radians): α_A = " << fixed(fit.angles.alpha_a, precision)
       << ", α_A′ = " << fixed(fit.angles.alpha_ap, precision) << ", β_B = " << fixed(fit.angles.beta_b, precision)
       << ", β_B′ = " << fixed(fit.angles.beta_bp, precision) << '\n';
    os << "  model E = (" << fixed(m.e_ab, precision) << ", " << fixed(m.e_abp, precision) << ", "
       << fixed(m.e_apb, precision) << ", " << fixed(m.e_apbp, precision) << "), s = " << fixed(chsh_value(m), precision)
       << '\n';
    std::ostringstream res;
    res.precision(3);
    res << std::scientific << fit.residual;
    os << "  residual = " << res.str() << ", evaluations = " << fit.evaluations
       << ", converged = " << (fit.converged ? "yes" : "no") << '\n';
    return os.str();
}

}  // namespace qcog
