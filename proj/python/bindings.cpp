#include "tensoradj/errors.hpp"
#include "tensoradj/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tensoradj;

namespace {

// JSON crosses the boundary as text so Python sees plain dicts and lists.
py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
json from_python(const py::object& o) { return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

py::dict report_dict(const Report& r)
{
    py::dict d;
    d["ok"] = r.ok();
    d["violations"] = r.violations;
    return d;
}

// Validates a category, module or functor document; mathematical errors become violations.
py::dict validate_document(const py::object& doc)
{
    json j = from_python(doc);
    const Catalog& cat = default_catalog();
    std::string fmt = j.is_object() ? j.value("format", "") : "";
    py::dict out;
    Report r;
    try {
        if (fmt == "tensoradj-cat/1") {
            CategoryPtr c = category_from_json(j);
            out["kind"] = "category";
            out["id"] = c->id;
            r = c->validate();
        } else if (fmt == "tensoradj-mod/1") {
            ModulePtr m = module_from_json(j, cat);
            out["kind"] = "module";
            out["id"] = m->C().id + "/" + m->id;
            r = m->validate();
        } else if (fmt == "tensoradj-fun/1") {
            ModuleFunctor f = functor_from_json(j, cat);
            out["kind"] = "functor";
            out["id"] = f.source->C().id + "/" + f.source->id + " -> " + f.target->C().id + "/" + f.target->id;
            r = f.validate();
        } else {
            throw SchemaError("unknown or missing \"format\"");
        }
    } catch (const Error& e) {
        if (is_input_error(e))
            throw;
        r.add(std::string(e.kind()) + ": " + e.what());
    }
    out["ok"] = r.ok();
    out["violations"] = r.violations;
    return out;
}

}  // namespace

PYBIND11_MODULE(tensoradj, m)
{
    m.doc() = "Exact adjoint algebras of module categories over fusion categories";

    // Leaked on purpose: the exception types live as long as the interpreter.
    static PyObject* base = PyErr_NewException("tensoradj.Error", PyExc_RuntimeError, nullptr);
    static PyObject* input = PyErr_NewException("tensoradj.InputError", base, nullptr);
    m.attr("Error") = py::handle(base);
    m.attr("InputError") = py::handle(input);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            std::string msg = std::string(e.kind()) + ": " + e.what();
            PyErr_SetString(is_input_error(e) ? input : base, msg.c_str());
        } catch (const json::exception& e) {
            PyErr_SetString(input, (std::string("SchemaError: ") + e.what()).c_str());
        }
    });

    m.def("categories", [] { return default_catalog().category_ids(); });
    m.def("modules", [](const std::string& c) { return default_catalog().module_ids(c); }, py::arg("category"));
    m.def("simples", [](const std::string& c) { return default_catalog().category(c)->simples; },
          py::arg("category"));

    m.def(
        "export",
        [](const std::string& c, const std::string& mod) {
            const Catalog& cat = default_catalog();
            return to_python(mod.empty() ? category_to_json(*cat.category(c)) : module_to_json(*cat.module(c, mod)));
        },
        py::arg("category"), py::arg("module") = "", "Catalog entry as a JSON document (category when module is empty).");
    m.def("validate", &validate_document, py::arg("document"),
          "Validate a category, module or functor document; returns kind, id, ok and violations.");

    m.def(
        "carrier",
        [](const std::string& c, const std::string& mod) {
            return shimizu_adjoint(default_catalog().module(c, mod)).algebra.carrier.object;
        },
        py::arg("category"), py::arg("module") = "regular", "Multiplicity of each simple in the adjoint algebra.");
    m.def(
        "compare",
        [](const std::string& c, const std::string& mod) {
            ModulePtr mp = default_catalog().module(c, mod);
            ComparisonIso r = compare_adjoints(shimizu_adjoint(mp), twocat_adjoint(mp));
            py::dict d;
            d["invertible"] = report_dict(r.invertible);
            d["center"] = report_dict(r.center);
            d["algebra"] = report_dict(r.algebra);
            d["ok"] = r.invertible.ok() && r.center.ok() && r.algebra.ok();
            return d;
        },
        py::arg("category"), py::arg("module") = "regular",
        "Certificates that the end construction and the adjoint-functor construction agree.");
    m.def(
        "class_function_dim",
        [](const std::string& c, const std::string& mod) {
            return class_functions(default_catalog().module(c, mod)).size();
        },
        py::arg("category"), py::arg("module") = "regular");

    m.def("suites", [] { return suite_names(); });
    m.def(
        "run_suite",
        [](const std::string& name, std::uint32_t seed, bool perturb) {
            py::list out;
            for (const auto& s : run_suite(name, default_catalog(), seed, perturb))
                out.append(to_python(suite_to_json(s)));
            return out;
        },
        py::arg("name"), py::arg("seed") = 5489u, py::arg("perturb") = false,
        "Run a verification suite (or \"all\"); one report per suite.");
}
