#include "tensoradj/errors.hpp"
#include "tensoradj/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tensoradj;

namespace {

// Exit codes are a stable contract: 0 success, 1 mathematical failure, 2 input error.
constexpr int kOk = 0, kMath = 1, kInput = 2;

struct Options {
    bool json = false;
    std::uint32_t seed = 5489u;
};

// Verification suites by their command-line names, in output order.
const std::vector<std::pair<std::string, std::string>>& suite_aliases()
{
    static const std::vector<std::pair<std::string, std::string>> a{
        {"lemma-4.4", "duals"},     {"lemma-5.2", "rescaling"}, {"lemma-5.4", "equivalence"},
        {"prop-1.1", "transport"},  {"theorem-5.6", "comparison"},
    };
    return a;
}

std::string fnv1a(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SchemaError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string obj_text(const Obj& o, const std::vector<std::string>& names)
{
    std::string r;
    for (size_t a = 0; a < o.size(); ++a) {
        if (o[a] == 0)
            continue;
        if (!r.empty())
            r += " + ";
        r += (o[a] == 1 ? "" : std::to_string(o[a]) + "*") + names[a];
    }
    return r.empty() ? "0" : r;
}

json obj_json(const Obj& o, const std::vector<std::string>& names)
{
    json j = json::object();
    for (size_t a = 0; a < o.size(); ++a)
        if (o[a] != 0)
            j[names[a]] = o[a];
    return j;
}

json report_json(const Report& r) { return {{"ok", r.ok()}, {"violations", r.violations}}; }

void print_report(const std::string& label, const Report& r)
{
    std::cout << (r.ok() ? "PASS  " : "FAIL  ") << label << "\n";
    for (const auto& v : r.violations)
        std::cout << "        " << v << "\n";
}

int cmd_validate(const Options& o, const std::vector<std::string>& paths)
{
    const Catalog& cat = default_catalog();
    json files = json::array();
    bool math_fail = false;
    for (const auto& path : paths) {
        std::string bytes = slurp(path);
        json j;
        try {
            j = json::parse(bytes);
        } catch (const json::parse_error& e) {
            throw SchemaError(path + ": malformed JSON: " + e.what());
        }
        std::string fmt = j.is_object() ? j.value("format", "") : "";
        std::string kind, id;
        Report r;
        try {
            if (fmt == "tensoradj-cat/1") {
                CategoryPtr c = category_from_json(j);
                kind = "category";
                id = c->id;
                r = c->validate();
            } else if (fmt == "tensoradj-mod/1") {
                ModulePtr m = module_from_json(j, cat);
                kind = "module";
                id = m->C().id + "/" + m->id;
                r = m->validate();
            } else if (fmt == "tensoradj-fun/1") {
                ModuleFunctor f = functor_from_json(j, cat);
                kind = "functor";
                id = f.source->C().id + "/" + f.source->id + " -> " + f.target->C().id + "/" + f.target->id;
                r = f.validate();
            } else {
                throw SchemaError(path + ": unknown or missing \"format\"");
            }
        } catch (const Error& e) {
            if (is_input_error(e))
                throw;
            r.add(std::string(e.kind()) + ": " + e.what());
        }
        math_fail = math_fail || !r.ok();
        files.push_back({{"path", path}, {"digest", fnv1a(bytes)}, {"kind", kind}, {"id", id}, {"report", report_json(r)}});
        if (!o.json)
            print_report(kind + " " + id + " (" + path + ", " + fnv1a(bytes) + ")", r);
    }
    if (o.json)
        std::cout << json{{"command", "validate"}, {"files", files}, {"ok", !math_fail}}.dump(2) << "\n";
    return math_fail ? kMath : kOk;
}

struct AdjointFlags {
    std::string category, module = "regular";
    bool two_cat = false, compare = false, cf = false;
};

int cmd_adjoint(const Options& o, const AdjointFlags& f)
{
    const Catalog& cat = default_catalog();
    ModulePtr m = cat.module(f.category, f.module);
    const std::vector<std::string>& names = m->C().simples;
    json out{{"command", "adjoint"}, {"module", f.category + "/" + f.module}};
    bool ok = true;

    ShimizuAdjoint s = shimizu_adjoint(m);
    Report sr = validate_center_algebra(s.algebra);
    ok = ok && sr.ok();
    out["shimizu"] = {{"carrier", obj_json(s.algebra.carrier.object, names)},
                      {"report", report_json(sr)},
                      {"mult", morphism_to_json(s.algebra.mult)},
                      {"unit", morphism_to_json(s.algebra.unit)}};
    if (!o.json) {
        std::cout << "adjoint algebra of " << f.category << "/" << f.module << "\n";
        std::cout << "      carrier " << obj_text(s.algebra.carrier.object, names) << "\n";
        print_report("algebra in the center", sr);
    }

    if (f.two_cat || f.compare) {
        TwoCatAdjoint t = twocat_adjoint(m);
        Report tr = validate_center_algebra(t.phi_image);
        ok = ok && tr.ok();
        if (f.two_cat) {
            out["two_cat"] = {{"carrier", obj_json(t.phi_image.carrier.object, names)},
                              {"report", report_json(tr)},
                              {"mult", morphism_to_json(t.phi_image.mult)},
                              {"unit", morphism_to_json(t.phi_image.unit)}};
            if (!o.json) {
                std::cout << "      L(1) " << obj_text(t.phi_image.carrier.object, names) << "\n";
                print_report("two-categorical algebra in the center", tr);
            }
        }
        if (f.compare) {
            ComparisonIso c = compare_adjoints(s, t);
            ok = ok && c.ok();
            out["compare"] = {{"phi", morphism_to_json(c.phi)},
                              {"invertible", report_json(c.invertible)},
                              {"center", report_json(c.center)},
                              {"algebra", report_json(c.algebra)}};
            if (!o.json) {
                print_report("comparison map is invertible", c.invertible);
                print_report("comparison map is a center morphism", c.center);
                print_report("comparison map is an algebra morphism", c.algebra);
            }
        }
    }
    if (f.cf) {
        size_t dim = class_functions(m).size();
        out["class_functions"] = {{"dim", dim}};
        if (!o.json)
            std::cout << "      class functions dim " << dim << "\n";
    }
    out["ok"] = ok;
    if (o.json)
        std::cout << out.dump(2) << "\n";
    return ok ? kOk : kMath;
}

int cmd_verify(const Options& o, const std::string& suite, bool perturb)
{
    std::vector<std::pair<std::string, std::string>> todo;
    for (const auto& a : suite_aliases())
        if (suite == "all" || suite == a.first)
            todo.push_back(a);
    if (todo.empty())
        throw SchemaError("unknown suite '" + suite + "'");
    json suites = json::array();
    bool ok = true;
    for (const auto& [cli_name, lib_name] : todo) {
        SuiteReport r = run_suite(lib_name, default_catalog(), o.seed, perturb).front();
        ok = ok && r.ok();
        json j = suite_to_json(r);
        j["suite"] = cli_name;
        suites.push_back(j);
        if (!o.json) {
            std::cout << cli_name << (perturb ? " (negative controls)" : "") << "\n";
            for (const auto& row : r.rows) {
                std::cout << (row.pass ? "  PASS  " : "  FAIL  ") << row.entry << "  " << row.check;
                if (!row.detail.empty())
                    std::cout << "  [" << row.detail << "]";
                std::cout << "\n";
            }
        }
    }
    if (o.json)
        std::cout << json{{"command", "verify"}, {"seed", o.seed}, {"perturb", perturb}, {"suites", suites}, {"ok", ok}}
                         .dump(2)
                  << "\n";
    else
        std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
    return ok ? kOk : kMath;
}

int cmd_catalog_list(const Options& o)
{
    json entries = json::array();
    for (const auto& e : default_catalog().entries()) {
        entries.push_back({{"id", e.id}, {"kind", e.kind}, {"provenance", e.provenance}});
        if (!o.json)
            std::cout << e.kind << "  " << e.id << "  " << e.provenance << "\n";
    }
    if (o.json)
        std::cout << json{{"command", "catalog list"}, {"entries", entries}}.dump(2) << "\n";
    return kOk;
}

int cmd_catalog_export(const Options& o, const std::string& id, const std::string& path)
{
    const Catalog& cat = default_catalog();
    auto slash = id.find('/');
    json j = slash == std::string::npos ? category_to_json(*cat.category(id))
                                        : module_to_json(*cat.module(id.substr(0, slash), id.substr(slash + 1)));
    write_json_file(path, j);
    if (o.json)
        std::cout << json{{"command", "catalog export"}, {"id", id}, {"path", path}}.dump(2) << "\n";
    else
        std::cout << "wrote " << id << " to " << path << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with adjoint algebras of module categories over fusion categories"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit a JSON report on stdout");
    app.add_option("--seed", o.seed, "Seed for randomized property trials")->capture_default_str();

    std::vector<std::string> paths;
    auto* validate = app.add_subcommand("validate", "Validate category, module or functor JSON files");
    validate->add_option("paths", paths, "Files to validate")->required()->check(CLI::ExistingFile);

    AdjointFlags af;
    auto* adjoint = app.add_subcommand("adjoint", "Build the adjoint algebra of a catalog module");
    adjoint->add_option("--category", af.category, "Catalog category id")->required();
    adjoint->add_option("--module", af.module, "Module id within the category")->capture_default_str();
    adjoint->add_flag("--two-cat", af.two_cat, "Also build the algebra from the regular-module end");
    adjoint->add_flag("--compare", af.compare, "Certify the comparison isomorphism between both constructions");
    adjoint->add_flag("--cf", af.cf, "Dimension of the class functions");

    std::string suite;
    bool perturb = false;
    std::vector<std::string> suite_choices{"all"};
    for (const auto& a : suite_aliases())
        suite_choices.push_back(a.first);
    auto* verify = app.add_subcommand("verify", "Run a verification suite over the catalog");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_choices));
    verify->add_flag("--perturb", perturb, "Run the negative controls; passing means every perturbation was caught");

    auto* catalog = app.add_subcommand("catalog", "Inspect the built-in catalog");
    catalog->require_subcommand(1);
    catalog->fallthrough();
    auto* list = catalog->add_subcommand("list", "List catalog entries");
    std::string export_id, export_path;
    auto* exp = catalog->add_subcommand("export", "Write a catalog entry as JSON");
    exp->add_option("id", export_id, "Category id or category/module")->required();
    exp->add_option("path", export_path, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (validate->parsed())
            return cmd_validate(o, paths);
        if (adjoint->parsed())
            return cmd_adjoint(o, af);
        if (verify->parsed())
            return cmd_verify(o, suite, perturb);
        if (list->parsed())
            return cmd_catalog_list(o);
        if (exp->parsed())
            return cmd_catalog_export(o, export_id, export_path);
    } catch (const Error& e) {
        int code = is_input_error(e) ? kInput : kMath;
        if (o.json)
            std::cout << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}, {"exit", code}}.dump(2) << "\n";
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        return code;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
