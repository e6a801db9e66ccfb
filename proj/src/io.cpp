#include "tensoradj/io.hpp"

#include "tensoradj/catalog.hpp"
#include "tensoradj/errors.hpp"

#include <fstream>

namespace tensoradj {

namespace {

int get_int(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw SchemaError(std::string("expected integer for ") + what);
    return j.get<int>();
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<std::string> get_labels(const json& j, const char* key)
{
    const json& a = field(j, key);
    if (!a.is_array())
        throw SchemaError(std::string("field '") + key + "' must be an array");
    std::vector<std::string> r;
    for (const auto& x : a) {
        if (!x.is_string())
            throw SchemaError(std::string("labels in '") + key + "' must be strings");
        r.push_back(x.get<std::string>());
    }
    return r;
}

Mult3 get_mult(const json& j, const char* key, int n0, int n1, int n2)
{
    Mult3 m(n0, n1, n2);
    const json& a = field(j, key);
    if (!a.is_array())
        throw SchemaError(std::string("field '") + key + "' must be an array");
    for (const auto& row : a) {
        if (!row.is_array() || row.size() != 4)
            throw SchemaError(std::string("entries of '") + key + "' must be [i,j,k,mult]");
        int x = get_int(row[0], key), y = get_int(row[1], key), z = get_int(row[2], key), v = get_int(row[3], key);
        if (x < 0 || x >= n0 || y < 0 || y >= n1 || z < 0 || z >= n2)
            throw SchemaError(std::string("label out of range in '") + key + "'");
        if (v < 0)
            throw SchemaError(std::string("negative multiplicity in '") + key + "'");
        m.at(x, y, z) = v;
    }
    return m;
}

json mult_to_json(const Mult3& m)
{
    json a = json::array();
    for (int x = 0; x < m.n0; ++x)
        for (int y = 0; y < m.n1; ++y)
            for (int z = 0; z < m.n2; ++z)
                if (m(x, y, z))
                    a.push_back({x, y, z, m(x, y, z)});
    return a;
}

std::array<int, 3> get_triple(const json& j, const char* key)
{
    const json& a = field(j, key);
    if (!a.is_array() || a.size() != 3)
        throw SchemaError(std::string("field '") + key + "' must have three labels");
    return {get_int(a[0], key), get_int(a[1], key), get_int(a[2], key)};
}

}  // namespace

json scalar_to_json(const ExactScalar& s)
{
    ExactScalar m = s.minimized();
    json coords = json::array();
    for (const auto& c : m.coords())
        coords.push_back(rational_to_string(c));
    return {{"conductor", m.conductor()}, {"coords", coords}};
}

ExactScalar scalar_from_json(const json& j)
{
    if (j.is_number_integer())
        return ExactScalar(j.get<long>());
    if (j.is_string())
        return ExactScalar::parse_rational(j.get<std::string>());
    if (!j.is_object())
        throw SchemaError("scalar must be an object, an integer or a rational string");
    int n = get_int(field(j, "conductor"), "conductor");
    if (n < 1 || n > kMaxConductor)
        throw UnsupportedConductor("conductor " + std::to_string(n) + " is not supported");
    const json& c = field(j, "coords");
    if (!c.is_array() || static_cast<int>(c.size()) != euler_phi(n))
        throw SchemaError("scalar coords must have length phi(conductor)");
    std::vector<mpq_class> v;
    for (const auto& x : c) {
        if (x.is_number_integer())
            v.emplace_back(x.get<long>());
        else if (x.is_string())
            v.push_back(ExactScalar::parse_rational(x.get<std::string>()).coords()[0]);
        else
            throw SchemaError("scalar coordinate must be a 'p/q' string");
    }
    return ExactScalar(n, v);
}

json matrix_to_json(const ExactMatrix& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k)
            row.push_back(scalar_to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

ExactMatrix matrix_from_json(const json& j)
{
    if (!j.is_array())
        throw SchemaError("matrix must be an array of rows");
    std::vector<std::vector<ExactScalar>> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            throw SchemaError("matrix row must be an array");
        std::vector<ExactScalar> row;
        for (const auto& x : r)
            row.push_back(scalar_from_json(x));
        rows.push_back(row);
    }
    try {
        return ExactMatrix::from_rows(rows);
    } catch (const ShapeError& e) {
        throw SchemaError(e.what());
    }
}

json morphism_to_json(const Morphism& f)
{
    json blocks = json::array();
    for (const auto& b : f.blocks)
        blocks.push_back(matrix_to_json(b));
    return {{"source", f.src}, {"target", f.tgt}, {"blocks", blocks}};
}

json category_to_json(const FusionCategory& c)
{
    json F = json::array();
    int r = c.rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int x = 0; x < r; ++x)
                for (int d = 0; d < r; ++d) {
                    const ExactMatrix& m = c.F(a, b, x, d);
                    if (m.rows() && !m.is_identity())
                        F.push_back({{"abcd", {a, b, x, d}}, {"matrix", matrix_to_json(m)}});
                }
    return {{"format", "tensoradj-cat/1"}, {"id", c.id},     {"simples", c.simples}, {"unit", c.unit},
            {"dual", c.dual},              {"N", mult_to_json(c.N)}, {"F", F}};
}

CategoryPtr category_from_json(const json& j)
{
    if (j.value("format", "") != "tensoradj-cat/1")
        throw SchemaError("not a tensoradj-cat/1 document");
    auto simples = get_labels(j, "simples");
    int r = static_cast<int>(simples.size());
    int unit = get_int(field(j, "unit"), "unit");
    std::vector<int> dual;
    const json& d = field(j, "dual");
    if (!d.is_array())
        throw SchemaError("field 'dual' must be an array");
    for (const auto& x : d)
        dual.push_back(get_int(x, "dual"));
    Mult3 N = get_mult(j, "N", r, r, r);
    std::vector<std::pair<std::array<int, 4>, ExactMatrix>> blocks;
    if (j.contains("F")) {
        if (!j["F"].is_array())
            throw SchemaError("field 'F' must be an array");
        for (const auto& e : j["F"]) {
            const json& k = field(e, "abcd");
            if (!k.is_array() || k.size() != 4)
                throw SchemaError("'abcd' must have four labels");
            blocks.push_back({{get_int(k[0], "abcd"), get_int(k[1], "abcd"), get_int(k[2], "abcd"), get_int(k[3], "abcd")},
                              matrix_from_json(field(e, "matrix"))});
        }
    }
    std::string id = j.value("id", "file");
    return std::make_shared<FusionCategory>(id, simples, unit, dual, N, blocks);
}

json module_to_json(const ModuleCategory& m)
{
    const FusionCategory& c = m.C();
    json blocks = json::array();
    for (int x = 0; x < c.rank(); ++x)
        for (int y = 0; y < c.rank(); ++y)
            for (int p = 0; p < m.size(); ++p) {
                bool trivial = true;
                for (int n = 0; n < m.size(); ++n)
                    trivial = trivial && m.Mblock(x, y, p, n).is_identity();
                if (trivial)
                    continue;
                Morphism full = m.massoc(c.simple(x), c.simple(y), m.msimple(p));
                int rows = total_dim(full.tgt), cols = total_dim(full.src);
                ExactMatrix d(rows, cols);
                int r0 = 0, c0 = 0;
                for (const auto& b : full.blocks) {
                    d.set_block(r0, c0, b);
                    r0 += b.rows();
                    c0 += b.cols();
                }
                blocks.push_back({{"xym", {x, y, p}}, {"matrix", matrix_to_json(d)}});
            }
    return {{"format", "tensoradj-mod/1"}, {"id", m.id},     {"base", c.id},
            {"msimples", m.msimples},      {"A", mult_to_json(m.A)}, {"Mblocks", blocks}};
}

ModulePtr module_from_json(const json& j, const Catalog& cat, const CategoryPtr& base_override)
{
    if (j.value("format", "") != "tensoradj-mod/1")
        throw SchemaError("not a tensoradj-mod/1 document");
    CategoryPtr base = base_override;
    if (!base) {
        const json& b = field(j, "base");
        if (!b.is_string())
            throw SchemaError("field 'base' must be a category id");
        base = cat.category(b.get<std::string>());
    }
    auto ms = get_labels(j, "msimples");
    int r = base->rank(), s = static_cast<int>(ms.size());
    Mult3 A = get_mult(j, "A", r, s, s);
    std::vector<std::pair<std::array<int, 4>, ExactMatrix>> blocks;
    if (j.contains("Mblocks")) {
        if (!j["Mblocks"].is_array())
            throw SchemaError("field 'Mblocks' must be an array");
        for (const auto& e : j["Mblocks"]) {
            auto [x, y, p] = get_triple(e, "xym");
            if (x < 0 || x >= r || y < 0 || y >= r || p < 0 || p >= s)
                throw SchemaError("module associator label out of range");
            ExactMatrix full = matrix_from_json(field(e, "matrix"));
            if (e.contains("n")) {
                blocks.push_back({{x, y, p, get_int(e["n"], "n")}, full});
                continue;
            }
            // Split the block-diagonal matrix by target label.
            int r0 = 0, c0 = 0;
            for (int n = 0; n < s; ++n) {
                int sd = assoc_source_dim(x, y, p, n, base->N, A);
                int td = assoc_target_dim(x, y, p, n, A, A);
                if (r0 + td > full.rows() || c0 + sd > full.cols())
                    throw SchemaError("module associator matrix has wrong shape");
                blocks.push_back({{x, y, p, n}, full.block(r0, c0, td, sd)});
                r0 += td;
                c0 += sd;
            }
            if (r0 != full.rows() || c0 != full.cols())
                throw SchemaError("module associator matrix has wrong shape");
            // Off-diagonal parts must vanish.
            ExactMatrix rebuilt(full.rows(), full.cols());
            int rr = 0, cc = 0;
            for (size_t k = blocks.size() - s; k < blocks.size(); ++k) {
                rebuilt.set_block(rr, cc, blocks[k].second);
                rr += blocks[k].second.rows();
                cc += blocks[k].second.cols();
            }
            if (rebuilt != full)
                throw SchemaError("module associator matrix is not block diagonal by target");
        }
    }
    return std::make_shared<ModuleCategory>(j.value("id", "file"), base, ms, A, blocks);
}

namespace {

ExactMatrix block_diagonal(const Morphism& f)
{
    ExactMatrix d(total_dim(f.tgt), total_dim(f.src));
    int r0 = 0, c0 = 0;
    for (const auto& b : f.blocks) {
        d.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return d;
}

ModulePtr module_by_key(const json& j, const char* key, const Catalog& cat)
{
    const json& v = field(j, key);
    if (!v.is_string())
        throw SchemaError(std::string("field '") + key + "' must be a \"category/module\" key");
    std::string s = v.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos)
        throw SchemaError(std::string("field '") + key + "' must be a \"category/module\" key");
    return cat.module(s.substr(0, slash), s.substr(slash + 1));
}

}  // namespace

json functor_to_json(const ModuleFunctor& f)
{
    ModuleFunctor flat = f.flatten();
    const FusionCategory& c = f.source->C();
    json table = json::array(), coh = json::array();
    auto t = flat.table();
    for (int m = 0; m < f.source->size(); ++m)
        for (int n = 0; n < f.target->size(); ++n)
            if (t[m][n])
                table.push_back({m, n, t[m][n]});
    for (int x = 0; x < c.rank(); ++x)
        for (int m = 0; m < f.source->size(); ++m) {
            Morphism cx = flat.coherence(c.simple(x), f.source->msimple(m));
            if (!cx.is_identity())
                coh.push_back({{"xm", {x, m}}, {"matrix", matrix_to_json(block_diagonal(cx))}});
        }
    return {{"format", "tensoradj-fun/1"},
            {"source", c.id + "/" + f.source->id},
            {"target", f.target->C().id + "/" + f.target->id},
            {"table", table},
            {"coherence", coh}};
}

ModuleFunctor functor_from_json(const json& j, const Catalog& cat)
{
    if (j.value("format", "") != "tensoradj-fun/1")
        throw SchemaError("not a tensoradj-fun/1 document");
    ModulePtr src = module_by_key(j, "source", cat), tgt = module_by_key(j, "target", cat);
    if (src->base != tgt->base && !src->C().same_data(tgt->C()))
        throw SchemaError("functor source and target are over different categories");
    int ns = src->size(), nt = tgt->size(), r = src->C().rank();
    std::vector<std::vector<int>> t(ns, std::vector<int>(nt, 0));
    const json& tab = field(j, "table");
    if (!tab.is_array())
        throw SchemaError("field 'table' must be an array");
    for (const auto& e : tab) {
        if (!e.is_array() || e.size() != 3)
            throw SchemaError("table entries must be [m, n, mult]");
        int m = get_int(e[0], "m"), n = get_int(e[1], "n"), k = get_int(e[2], "mult");
        if (m < 0 || m >= ns || n < 0 || n >= nt || k < 0)
            throw SchemaError("functor table entry out of range");
        t[m][n] = k;
    }
    // Shapes come from a coherence-free copy; unspecified blocks default to the identity.
    ModuleFunctor shape = ModuleFunctor::from_table(src, tgt, t, {});
    std::vector<Morphism> coh;
    for (int x = 0; x < r; ++x)
        for (int m = 0; m < ns; ++m) {
            Obj X = src->C().simple(x), M = src->msimple(m);
            Obj s0 = shape.apply(src->act(X, M)), t0 = tgt->act(X, shape.apply(M));
            if (s0 != t0)
                throw SchemaError("functor table is not compatible with the actions");
            coh.push_back(Morphism::identity(s0));
        }
    if (j.contains("coherence")) {
        if (!j["coherence"].is_array())
            throw SchemaError("field 'coherence' must be an array");
        for (const auto& e : j["coherence"]) {
            const json& xm = field(e, "xm");
            if (!xm.is_array() || xm.size() != 2)
                throw SchemaError("field 'xm' must be [x, m]");
            int x = get_int(xm[0], "x"), m = get_int(xm[1], "m");
            if (x < 0 || x >= r || m < 0 || m >= ns)
                throw SchemaError("coherence label out of range");
            ExactMatrix full = matrix_from_json(field(e, "matrix"));
            Morphism& dst = coh[static_cast<size_t>(x) * ns + m];
            if (full.rows() != total_dim(dst.tgt) || full.cols() != total_dim(dst.src))
                throw SchemaError("coherence matrix has wrong shape");
            int r0 = 0, c0 = 0;
            for (auto& b : dst.blocks) {
                b = full.block(r0, c0, b.rows(), b.cols());
                r0 += b.rows();
                c0 += b.cols();
            }
            if (block_diagonal(dst) != full)
                throw SchemaError("coherence matrix is not block diagonal by target");
        }
    }
    return ModuleFunctor::from_table(src, tgt, t, std::move(coh));
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw SchemaError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace tensoradj
