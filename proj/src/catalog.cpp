#include "tensoradj/catalog.hpp"

#include "tensoradj/errors.hpp"
#include "tensoradj/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

namespace tensoradj {

int GroupTable::inverse(int g) const
{
    for (int h = 0; h < order(); ++h)
        if (mul[g][h] == identity)
            return h;
    throw SchemaError("group element without inverse");
}

GroupTable cyclic_group(int n)
{
    GroupTable g;
    for (int k = 0; k < n; ++k)
        g.names.push_back(k == 0 ? "e" : k == 1 ? "g" : "g" + std::to_string(k));
    g.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.mul[a][b] = (a + b) % n;
    return g;
}

GroupTable product_group(const GroupTable& g, const GroupTable& h)
{
    GroupTable p;
    int nh = h.order();
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < nh; ++b)
            p.names.push_back(a == g.identity && b == h.identity ? "e" : "(" + g.names[a] + "," + h.names[b] + ")");
    int n = g.order() * nh;
    p.mul.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            p.mul[x][y] = g.mul[x / nh][y / nh] * nh + h.mul[x % nh][y % nh];
    p.identity = g.identity * nh + h.identity;
    return p;
}

GroupTable symmetric_group_3()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    GroupTable g;
    for (const auto& q : perms)
        g.names.push_back(q == std::array<int, 3>{0, 1, 2} ? "e"
                                                          : "[" + std::to_string(q[0]) + std::to_string(q[1]) +
                                                                std::to_string(q[2]) + "]");
    int n = static_cast<int>(perms.size());
    g.mul.assign(n, std::vector<int>(n));
    // (pq)(i) = p(q(i))
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::array<int, 3> r{};
            for (int i = 0; i < 3; ++i)
                r[i] = perms[a][perms[b][i]];
            g.mul[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), r) - perms.begin());
        }
    return g;
}

void check_cocycle(const GroupTable& g, const Cochain3& w)
{
    int n = g.order(), e = g.identity;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!w(e, a, b).is_one() || !w(a, e, b).is_one() || !w(a, b, e).is_one())
                throw CocycleError("3-cochain is not normalized");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    const auto& m = g.mul;
                    ExactScalar lhs = w(b, c, d) * w(a, m[b][c], d) * w(a, b, c);
                    ExactScalar rhs = w(m[a][b], c, d) * w(a, b, m[c][d]);
                    if (lhs != rhs)
                        throw CocycleError("3-cocycle condition fails at (" + g.names[a] + "," + g.names[b] + "," +
                                           g.names[c] + "," + g.names[d] + ")");
                }
}

CategoryPtr build_pointed(const std::string& id, const GroupTable& g, const Cochain3& omega)
{
    check_cocycle(g, omega);
    int n = g.order();
    Mult3 N(n, n, n);
    std::vector<int> dual(n);
    for (int a = 0; a < n; ++a) {
        dual[a] = g.inverse(a);
        for (int b = 0; b < n; ++b)
            N.at(a, b, g.mul[a][b]) = 1;
    }
    std::vector<std::pair<std::array<int, 4>, ExactMatrix>> blocks;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                ExactScalar w = omega(a, b, c);
                if (!w.is_one())
                    blocks.push_back({{a, b, c, g.mul[g.mul[a][b]][c]}, ExactMatrix::scalar(w)});
            }
    // Pointed categories built here use a group identity as unit label.
    return std::make_shared<FusionCategory>(id, g.names, g.identity, dual, N, blocks);
}

CategoryPtr build_fibonacci()
{
    Mult3 N(2, 2, 2);
    N.at(0, 0, 0) = N.at(0, 1, 1) = N.at(1, 0, 1) = N.at(1, 1, 0) = N.at(1, 1, 1) = 1;
    // Gauge over Q(zeta_5) with rational off-diagonal entry: phi = 1 + z + z^4 is the golden ratio.
    ExactScalar z = ExactScalar::zeta(5);
    ExactScalar phi = ExactScalar(1) + z + z * z * z * z;
    ExactScalar ip = phi.inv();
    ExactMatrix f = ExactMatrix::from_rows({{ip, ExactScalar(1)}, {ip, -ip}});
    return std::make_shared<FusionCategory>("fib", std::vector<std::string>{"1", "tau"}, 0, std::vector<int>{0, 1}, N,
                                            std::vector<std::pair<std::array<int, 4>, ExactMatrix>>{{{1, 1, 1, 1}, f}});
}

ModulePtr build_module_regular(const CategoryPtr& c)
{
    int r = c->rank();
    Mult3 A(r, r, r);
    A.v = c->N.v;
    std::vector<std::pair<std::array<int, 4>, ExactMatrix>> blocks;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int m = 0; m < r; ++m)
                for (int n = 0; n < r; ++n) {
                    const ExactMatrix& f = c->F(a, b, m, n);
                    if (f.rows() && !f.is_identity())
                        blocks.push_back({{a, b, m, n}, f});
                }
    return std::make_shared<ModuleCategory>("regular", c, c->simples, A, blocks);
}

ModulePtr build_module_subgroup(const CategoryPtr& c, const GroupTable& g, const std::vector<int>& h,
                                const std::string& id)
{
    int n = g.order();
    if (c->rank() != n)
        throw SchemaError("group does not match the category");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int x = 0; x < n; ++x)
                if (!c->F(a, b, x, g.mul[g.mul[a][b]][x]).is_identity())
                    throw CocycleError("coset module with trivial associator needs a trivial 3-cocycle");
    std::vector<bool> inh(n, false);
    for (int x : h)
        inh[x] = true;
    for (int x : h)
        for (int y : h)
            if (!inh[g.mul[x][y]])
                throw SchemaError("subgroup is not closed under multiplication");
    // coset[x] = index of xH; cosets ordered by smallest representative.
    std::vector<int> coset(n, -1);
    std::vector<std::string> names;
    int k = 0;
    for (int x = 0; x < n; ++x) {
        if (coset[x] >= 0)
            continue;
        for (int y : h)
            coset[g.mul[x][y]] = k;
        names.push_back(g.names[x] + "H");
        ++k;
    }
    Mult3 A(n, k, k);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            A.at(x, coset[y], coset[g.mul[x][y]]) = 1;
    return std::make_shared<ModuleCategory>(id, c, names, A,
                                            std::vector<std::pair<std::array<int, 4>, ExactMatrix>>{});
}

Catalog::Catalog(const std::string& dir)
{
    auto trivial = [](int, int, int) { return ExactScalar(1); };
    GroupTable z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4), s3 = symmetric_group_3();
    GroupTable z2z2 = product_group(z2, z2);
    std::string pointed = "pointed category Vec_G with group law fusion and associator given by a 3-cocycle";

    auto vecz2 = build_pointed("vecz2", z2, trivial);
    add(vecz2, pointed + "; G = Z/2, trivial cocycle");
    auto vecz2w = build_pointed("vecz2w", z2, [](int a, int b, int c) {
        return ExactScalar(a == 1 && b == 1 && c == 1 ? -1 : 1);
    });
    add(vecz2w, pointed + "; G = Z/2, omega(g,g,g) = -1");
    add(build_pointed("vecz3", z3, trivial), pointed + "; G = Z/3, trivial cocycle");
    add(build_pointed("vecz4", z4, trivial), pointed + "; G = Z/4, trivial cocycle");
    add(build_pointed("vecz4w", z4,
                      [](int a, int b, int c) { return ExactScalar::zeta(4, b + c >= 4 ? a : 0); }),
        pointed + "; G = Z/4, omega(a,b,c) = i^(a [b+c >= 4])");
    add(build_pointed("vecz2xz2", z2z2, trivial), pointed + "; G = Z/2 x Z/2, trivial cocycle");
    auto vecs3 = build_pointed("vecs3", s3, trivial);
    add(vecs3, pointed + "; G = S3 (permutations of 012, composed right to left), trivial cocycle");
    add(build_fibonacci(), "Fibonacci: tau (*) tau = 1 + tau, associator over Q(zeta_5) with golden ratio entries");

    for (const auto& [cid, entry] : std::map(cats_))
        add(build_module_regular(entry.first), "regular", "regular module: action by the tensor product");
    add(build_module_subgroup(vecz2, z2, {0, 1}, "vec"), "vec",
        "Vec_{G/H} for G = H = Z/2: the fibre functor module Vec");
    std::vector<int> a3;
    for (int x = 0; x < s3.order(); ++x)
        if (s3.mul[x][s3.mul[x][x]] == s3.identity)
            a3.push_back(x);
    add(build_module_subgroup(vecs3, s3, a3, "cosets-a3"), "cosets-a3", "Vec_{G/H} for G = S3, H = A3");

    if (dir.empty())
        return;
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw SchemaError("catalog directory " + dir + " does not exist");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    // Categories first so modules can refer to them.
    std::vector<json> modules;
    for (const auto& p : files) {
        json j = read_json_file(p.string());
        std::string fmt = j.value("format", "");
        if (fmt == "tensoradj-cat/1")
            add(category_from_json(j), "file " + p.filename().string());
        else if (fmt == "tensoradj-mod/1")
            modules.push_back(j);
    }
    for (const auto& j : modules) {
        ModulePtr m = module_from_json(j, *this);
        add(m, m->id, "file");
    }
}

void Catalog::add(const CategoryPtr& c, const std::string& provenance) { cats_[c->id] = {c, provenance}; }

void Catalog::add(const ModulePtr& m, const std::string& local_id, const std::string& provenance)
{
    mods_[m->C().id + "/" + local_id] = {m, provenance};
}

std::vector<CatalogEntry> Catalog::entries() const
{
    std::vector<CatalogEntry> r;
    for (const auto& [id, e] : cats_)
        r.push_back({id, "category", e.second});
    for (const auto& [id, e] : mods_)
        r.push_back({id, "module", e.second});
    return r;
}

std::vector<std::string> Catalog::category_ids() const
{
    std::vector<std::string> r;
    for (const auto& [id, e] : cats_)
        r.push_back(id);
    return r;
}

std::vector<std::string> Catalog::module_ids(const std::string& category) const
{
    std::vector<std::string> r;
    std::string prefix = category + "/";
    for (const auto& [id, e] : mods_)
        if (id.compare(0, prefix.size(), prefix) == 0)
            r.push_back(id.substr(prefix.size()));
    return r;
}

CategoryPtr Catalog::category(const std::string& id) const
{
    auto it = cats_.find(id);
    if (it == cats_.end())
        throw SchemaError("unknown category '" + id + "'");
    return it->second.first;
}

ModulePtr Catalog::module(const std::string& category, const std::string& module) const
{
    auto it = mods_.find(category + "/" + module);
    if (it == mods_.end())
        throw SchemaError("unknown module '" + module + "' over category '" + category + "'");
    return it->second.first;
}

const Catalog& default_catalog()
{
    static const Catalog cat([] {
        const char* d = std::getenv("TENSORADJ_CATALOG");
        return std::string(d ? d : "");
    }());
    return cat;
}

}  // namespace tensoradj
