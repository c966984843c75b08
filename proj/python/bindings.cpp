#include "qcog/error.hpp"
#include "qcog/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;

namespace {

using Quad = std::tuple<double, double, double, double>;

qcog::ExpectationSet to_es(const Quad& q) {
    qcog::ExpectationSet es{std::get<0>(q), std::get<1>(q), std::get<2>(q), std::get<3>(q)};
    qcog::validate(es);
    return es;
}

Quad from_es(const qcog::ExpectationSet& es) { return {es.e_ab, es.e_abp, es.e_apb, es.e_apbp}; }

// Structured results cross the boundary as JSON text; the Python package
// decodes them into dicts.
std::string dump(const qcog::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_qcog, m) {
    m.doc() = "Native core of qcog";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const qcog::IoError& e) {
            PyErr_SetString(PyExc_OSError, e.what());
        } catch (const qcog::Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    // ingest
    m.def("relative_frequency", [](std::int64_t positives, std::int64_t total) {
        return qcog::to_double(qcog::relative_frequency({"", total, positives, "", std::nullopt}));
    }, py::arg("positives"), py::arg("total"));
    m.def("_conjunction_reports", [](const std::string& csv) {
        std::istringstream in(csv);
        qcog::json arr = qcog::json::array();
        for (const auto& d : qcog::parse_conjunction(in)) arr.push_back(qcog::to_json(qcog::conjunction_report(d)));
        return dump(arr);
    });
    m.def("_run_suite", [](const std::string& text) {
        const auto suite = qcog::parse_chsh_suite_text(text);
        const auto result = qcog::run_suite(suite);
        qcog::json j = qcog::to_json(result, suite);
        j["membership"] = qcog::to_json(qcog::membership_report(result.result.expectations));
        return dump(j);
    });

    // classical
    m.def("kolmogorov_interval", [](double p_a, double p_b) {
        const auto i = qcog::kolmogorov_interval(p_a, p_b);
        return std::make_pair(i.lo, i.hi);
    }, py::arg("p_a"), py::arg("p_b"));
    m.def("classify_overextension", [](double p_a, double p_b, double p_ab) {
        const auto v = qcog::classify_overextension({p_a, p_b, p_ab});
        return std::make_tuple(std::string(qcog::to_string(v.kind)), v.margin_a, v.margin_b);
    }, py::arg("p_a"), py::arg("p_b"), py::arg("p_ab"));
    m.def("measure_check", [](std::vector<double> weights, std::vector<std::size_t> a, std::vector<std::size_t> b) {
        const auto c = qcog::measure_check({std::move(weights), std::move(a), std::move(b)});
        py::dict d;
        d["mu_a"] = c.mu_a;
        d["mu_b"] = c.mu_b;
        d["mu_union"] = c.mu_union;
        d["mu_intersection"] = c.mu_intersection;
        d["union_ok"] = c.union_ok;
        d["cap_a_ok"] = c.cap_a_ok;
        d["cap_b_ok"] = c.cap_b_ok;
        return d;
    }, py::arg("weights"), py::arg("subset_a"), py::arg("subset_b"));

    // born2d
    m.def("angle_from_probability", &qcog::angle_from_probability, py::arg("p"));
    m.def("probability_from_angle", &qcog::probability_from_angle, py::arg("theta_degrees"));
    m.def("_fit_item", [](const std::string& item, double p_a, double p_ab, double p_b) {
        return dump(qcog::to_json(qcog::fit_item(item, p_a, p_ab, p_b)));
    });

    // chsh
    m.def("chsh_statistic", [](const Quad& es) {
        const auto r = qcog::chsh_statistic(to_es(es));
        return std::make_pair(r.s_value, std::string(qcog::to_string(r.verdict)));
    }, py::arg("expectations"));
    m.def("expectation", [](double p11, double p12, double p21, double p22) {
        return qcog::to_double(qcog::expectation(qcog::normalize(qcog::make_joint(p11, p12, p21, p22)).joint));
    }, "E of the joint probabilities after normalization");
    m.def("degenerate_identity_check", &qcog::degenerate_identity_check, py::arg("e"));

    // lhv
    m.def("enumerate_strategies", [] {
        std::vector<std::tuple<int, int, int, int>> out;
        for (const auto& s : qcog::enumerate_strategies()) out.emplace_back(s.a, s.a_prime, s.b, s.b_prime);
        return out;
    });
    m.def("lhv_chsh_bound", &qcog::lhv_chsh_bound);
    m.def("local_membership", [](const Quad& es) { return qcog::local_membership(to_es(es)); },
          py::arg("expectations"));
    m.def("_membership_report", [](const Quad& es) { return dump(qcog::to_json(qcog::membership_report(to_es(es)))); });

    // entfit
    m.def("model_expectations", [](const Quad& a) {
        return from_es(qcog::model_expectations({std::get<0>(a), std::get<1>(a), std::get<2>(a), std::get<3>(a)}));
    }, py::arg("angles"));
    m.def("loss", [](const Quad& a, const Quad& target) {
        return qcog::loss({std::get<0>(a), std::get<1>(a), std::get<2>(a), std::get<3>(a)}, to_es(target));
    }, py::arg("angles"), py::arg("target"));
    m.def("_fit", [](const Quad& target) { return dump(qcog::to_json(qcog::fit(to_es(target)))); });
}
