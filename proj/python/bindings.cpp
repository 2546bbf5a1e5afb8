#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "limitada/analysis.hpp"
#include "limitada/binseq.hpp"
#include "limitada/errors.hpp"
#include "limitada/interchange.hpp"
#include "limitada/ops.hpp"
#include "limitada/report.hpp"

namespace py = pybind11;
using namespace limitada;

namespace {

std::vector<AnyMachine> parse_all(const std::vector<std::string>& texts) {
    std::vector<AnyMachine> out;
    for (const auto& t : texts) out.push_back(parse_machine(t));
    return out;
}

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

}  // namespace

PYBIND11_MODULE(_limitada, m) {
    m.doc() = "Two-way, 1-limited and common-guess automata; machines travel as interchange JSON strings.";

    static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
    static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_MemoryError);
    static py::exception<ContractError> contract_error(m, "ContractError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InputError& e) {
            py::set_error(input_error, e.what());
        } catch (const ResourceError& e) {
            py::set_error(resource_error, e.what());
        } catch (const ContractError& e) {
            py::set_error(contract_error, e.what());
        }
    });

    m.def("full_binary_sequence", &full_binary_sequence, py::arg("n"));
    m.def("binseq_length", &binseq_length, py::arg("n"));

    m.def(
        "generate_binseq", [](const std::string& what, int n) { return serialize(generate_binseq(what, n)); },
        py::arg("what"), py::arg("n") = 1, "what: F, Fn, fact2dfa or family:<kind>:<length>");
    m.def(
        "generate_witness",
        [](const std::string& lang, const std::string& as, int n) {
            return serialize(generate_witness(lang, as, n, budgets_from_env()));
        },
        py::arg("lang"), py::arg("as_"), py::arg("n") = 1);

    m.def("convert_ops", &convert_ops);
    m.def(
        "convert",
        [](const std::string& op, const std::vector<std::string>& machines) {
            return serialize(convert(op, parse_all(machines), budgets_from_env()));
        },
        py::arg("op"), py::arg("machines"));

    m.def(
        "accepts", [](const std::string& machine, const std::string& word) {
            return decide(parse_machine(machine), word, budgets_from_env()).accepted;
        },
        py::arg("machine"), py::arg("word"));
    m.def(
        "decide",
        [](const std::string& machine, const std::string& word) {
            Decision d = decide(parse_machine(machine), word, budgets_from_env());
            return py::make_tuple(d.accepted, d.detail);
        },
        py::arg("machine"), py::arg("word"));
    m.def("kind", [](const std::string& machine) { return kind_of(parse_machine(machine)); }, py::arg("machine"));
    m.def("states", [](const std::string& machine) { return state_count(parse_machine(machine)); }, py::arg("machine"));

    m.def("primorial", [](long long k) { return to_py(primorial(k)); }, py::arg("k"));
    m.def("m_n_member", &m_n_member, py::arg("n"), py::arg("length"));
    m.def(
        "fooling_check",
        [](int n) {
            auto pairs = fooling_pairs_for_complement(n);
            FoolingCheck f = check_extended_fooling_set(pairs, complement(m_n_oracle(n)));
            py::dict d;
            d["pairs"] = pairs.size();
            d["ok"] = f.ok;
            return d;
        },
        py::arg("n"));
    m.def(
        "bound_report",
        [](int n) {
            BoundReport r = bound_report(n);
            py::list checks;
            for (const auto& c : r.checks) {
                py::dict d;
                d["name"] = c.name;
                d["lhs"] = c.lhs;
                d["relation"] = c.relation;
                d["rhs"] = c.rhs;
                d["holds"] = c.holds;
                d["required"] = c.required;
                d["note"] = c.note;
                checks.append(d);
            }
            py::dict out;
            out["n"] = r.n;
            out["k"] = r.k;
            out["checks"] = checks;
            out["required_hold"] = r.required_hold();
            return out;
        },
        py::arg("n"));

    m.def("pipeline_names", &pipeline_names);
    m.def(
        "report",
        [](const std::optional<std::string>& spec, const std::string& format) {
            ExperimentSpec s = spec ? parse_experiment_spec(*spec) : default_experiment();
            auto rows = run_experiment(s, budgets_from_env());
            if (format == "json") return report_json(s.name, rows);
            if (format == "tsv") return report_tsv(rows);
            throw InputError("format must be tsv or json");
        },
        py::arg("spec") = py::none(), py::arg("format") = "tsv");
}
