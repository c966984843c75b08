#include "qcog/cli.hpp"

#include "qcog/error.hpp"
#include "qcog/report.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace qcog::cli {

namespace {

int guarded(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return kOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct ChshOutcome {
    ChshSuite suite;
    SuiteResult result;
    MembershipReport membership;
    std::optional<PublishedChsh> published;
};

ChshOutcome analyse_chsh(const std::filesystem::path& path) {
    const json root = read_json_file(path);
    ChshOutcome o;
    o.suite = parse_chsh_suite_text(root.dump());
    o.result = run_suite(o.suite);
    o.membership = membership_report(o.result.result.expectations);
    o.published = parse_published(root);
    return o;
}

json chsh_json(const ChshOutcome& o) {
    json j = to_json(o.result, o.suite);
    j["membership"] = to_json(o.membership);
    if (o.published) {
        json p = json::object();
        for (std::size_t k = 0; k < 4; ++k) {
            const char* name = key(kSettingPairs[k]);
            if (o.published->sums[k]) p["S"][name] = *o.published->sums[k];
            if (o.published->expectations[k]) p["E"][name] = *o.published->expectations[k];
        }
        if (o.published->s) p["s"] = *o.published->s;
        j["published"] = p;
    }
    return j;
}

std::string chsh_text(const ChshOutcome& o, int precision) {
    return to_text(o.result, o.suite, precision, o.published) + to_text(o.membership, precision);
}

std::vector<BornFit> born_fits(const std::filesystem::path& path) {
    std::vector<BornFit> fits;
    for (const auto& b : parse_born_inputs_file(path))
        fits.push_back(fit_item(b.item, b.p_a, b.p_ab, b.p_b, b.label_a, b.label_ab, b.label_b));
    return fits;
}

std::vector<ConjunctionReport> conjunction_reports(const std::filesystem::path& path) {
    std::vector<ConjunctionReport> reports;
    for (const auto& d : parse_conjunction_file(path)) reports.push_back(conjunction_report(d));
    return reports;
}

}  // namespace

int cmd_conjunction(const RunConfig& c, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto reports = conjunction_reports(c.input_path);
        if (c.output_format == OutputFormat::json) {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            emit(out, arr);
        } else {
            for (std::size_t i = 0; i < reports.size(); ++i) out << (i ? "\n" : "") << to_text(reports[i], c.precision);
        }
    });
}

int cmd_chsh(const RunConfig& c, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ChshOutcome o = analyse_chsh(c.input_path);
        if (c.output_format == OutputFormat::json)
            emit(out, chsh_json(o));
        else
            out << chsh_text(o, c.precision);
    });
}

int cmd_born_fit(const RunConfig& c, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto fits = born_fits(c.input_path);
        if (c.output_format == OutputFormat::json) {
            json arr = json::array();
            for (const auto& f : fits) arr.push_back(to_json(f));
            emit(out, arr);
        } else {
            for (const auto& f : fits) out << to_text(f, c.precision);
        }
    });
}

int cmd_lhv_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const MembershipReport r = membership_report(read_expectation_input(c.input_path));
        if (c.output_format == OutputFormat::json)
            emit(out, to_json(r));
        else
            out << to_text(r, c.precision);
    });
}

int cmd_ent_fit(const RunConfig& c, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const FitResult r = fit(read_expectation_input(c.input_path));
        if (c.output_format == OutputFormat::json)
            emit(out, to_json(r));
        else
            out << to_text(r, c.precision);
    });
}

int cmd_report(const RunConfig& c, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        namespace fs = std::filesystem;
        if (!fs::is_directory(c.input_path)) throw IoError("not a directory: " + c.input_path.string());
        const fs::path conj = c.input_path / "conjunction.csv";
        const fs::path born = c.input_path / "born.csv";
        const fs::path chsh = c.input_path / "chsh.json";
        const bool has_conj = fs::exists(conj), has_born = fs::exists(born), has_chsh = fs::exists(chsh);
        if (!has_conj && !has_born && !has_chsh)
            throw IoError("no conjunction.csv, born.csv or chsh.json in " + c.input_path.string());

        // Compute everything before writing so a failure leaves no partial document.
        std::vector<ConjunctionReport> conj_reports;
        std::vector<BornFit> fits;
        std::optional<ChshOutcome> chsh_outcome;
        if (has_conj) conj_reports = conjunction_reports(conj);
        if (has_born) fits = born_fits(born);
        if (has_chsh) chsh_outcome = analyse_chsh(chsh);

        if (c.output_format == OutputFormat::json) {
            json doc = json::object();
            if (has_conj) {
                doc["conjunction"] = json::array();
                for (const auto& r : conj_reports) doc["conjunction"].push_back(to_json(r));
            }
            if (has_born) {
                doc["born"] = json::array();
                for (const auto& f : fits) doc["born"].push_back(to_json(f));
            }
            if (chsh_outcome) doc["chsh"] = chsh_json(*chsh_outcome);
            emit(out, doc);
            return;
        }
        bool first = true;
        auto heading = [&](const char* title) {
            out << (first ? "" : "\n") << "== " << title << " ==\n\n";
            first = false;
        };
        if (has_conj) {
            heading("Conjunction inequalities");
            for (std::size_t i = 0; i < conj_reports.size(); ++i)
                out << (i ? "\n" : "") << to_text(conj_reports[i], c.precision);
        }
        if (has_born) {
            heading("Born-rule vector model");
            for (const auto& f : fits) out << to_text(f, c.precision);
        }
        if (chsh_outcome) {
            heading("CHSH inequality");
            out << chsh_text(*chsh_outcome, c.precision);
        }
    });
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.precision < 2 || c.precision > 12) {
        err << "error: precision must be between 2 and 12\n";
        return kValidationError;
    }
    if (c.command == "conjunction") return cmd_conjunction(c, out, err);
    if (c.command == "chsh") return cmd_chsh(c, out, err);
    if (c.command == "born-fit") return cmd_born_fit(c, out, err);
    if (c.command == "lhv-check") return cmd_lhv_check(c, out, err);
    if (c.command == "ent-fit") return cmd_ent_fit(c, out, err);
    if (c.command == "report") return cmd_report(c, out, err);
    err << "error: unknown command '" << c.command << "'\n";
    return kValidationError;
}

}  // namespace qcog::cli
