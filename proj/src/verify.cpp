#include "tensoradj/verify.hpp"

#include "tensoradj/errors.hpp"

#include <algorithm>

namespace tensoradj {

namespace {

int simple_label(const Obj& o)
{
    int label = -1;
    for (size_t a = 0; a < o.size(); ++a) {
        if (o[a] == 0)
            continue;
        if (o[a] != 1 || label >= 0)
            return -1;
        label = static_cast<int>(a);
    }
    return label;
}

std::vector<std::vector<int>> permutation_table(const std::vector<int>& image)
{
    std::vector<std::vector<int>> t(image.size(), std::vector<int>(image.size(), 0));
    for (size_t p = 0; p < image.size(); ++p)
        t[p][image[p]] = 1;
    return t;
}

std::vector<Morphism> simple_coherence(const ModulePtr& src, const std::vector<int>& image,
                                       const std::function<ExactScalar(int, int)>& scale)
{
    std::vector<Morphism> coh;
    for (int x = 0; x < src->C().rank(); ++x)
        for (int p = 0; p < src->size(); ++p) {
            int q = simple_label(src->act(src->C().simple(x), src->msimple(p)));
            if (q < 0)
                throw ShapeError("simple_equivalence needs an action sending simples to simples");
            coh.push_back(Morphism::identity(src->msimple(image[q])).scaled(scale(x, p)));
        }
    return coh;
}

ModuleNatTrans identity_components(const ModuleFunctor& f, const ModuleFunctor& g)
{
    ModuleNatTrans a{f, g, {}};
    for (int p = 0; p < f.source->size(); ++p)
        a.comp.push_back(Morphism::identity(f.source->msimple(p)));
    return a;
}

std::string key(const ModuleCategory& m) { return m.C().id + "/" + m.id; }

std::vector<ModulePtr> catalog_modules(const Catalog& cat)
{
    std::vector<ModulePtr> r;
    for (const auto& c : cat.category_ids())
        for (const auto& m : cat.module_ids(c))
            r.push_back(cat.module(c, m));
    std::sort(r.begin(), r.end(), [](const ModulePtr& a, const ModulePtr& b) { return key(*a) < key(*b); });
    return r;
}

std::string first(const Report& r) { return r.ok() ? "" : r.violations.front(); }

ExactScalar random_nonzero(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), im(-2, 2);
    for (;;) {
        ExactScalar s = ExactScalar(num(rng)) / ExactScalar(den(rng)) + ExactScalar(im(rng)) * ExactScalar::zeta(4);
        if (!s.is_zero())
            return s;
    }
}

// Runs `body`, turning a mathematical exception into a failed row.
template <class F>
void guarded(SuiteReport& s, const std::string& entry, const std::string& check, F&& body)
{
    try {
        body();
    } catch (const Error& e) {
        if (is_input_error(e))
            throw;
        s.rows.push_back({entry, check, s.perturbed, std::string(e.kind()) + ": " + e.what()});
    }
}

SuiteReport comparison_suite(const Catalog& cat, bool perturb)
{
    SuiteReport s{"comparison", perturb, {}};
    for (const auto& m : catalog_modules(cat)) {
        std::string e = key(*m);
        guarded(s, e, perturb ? "sign flip in the half-braiding" : "comparison", [&] {
            ShimizuAdjoint sa = shimizu_adjoint(m);
            TwoCatAdjoint t = twocat_adjoint(m);
            if (perturb) {
                t.sigma2.back() = t.sigma2.back().scaled(ExactScalar(-1));
                materialize(t);
                ComparisonIso r = compare_adjoints(sa, t);
                s.rows.push_back({e, "sign flip in the half-braiding", !r.center.ok(),
                                  r.center.ok() ? "perturbation went unnoticed" : first(r.center)});
                return;
            }
            ComparisonIso r = compare_adjoints(sa, t);
            s.rows.push_back({e, "invertible", r.invertible.ok(), first(r.invertible)});
            s.rows.push_back({e, "center morphism", r.center.ok(), first(r.center)});
            s.rows.push_back({e, "algebra morphism", r.algebra.ok(), first(r.algebra)});
        });
    }
    return s;
}

SuiteReport duals_suite(const Catalog& cat, bool perturb)
{
    SuiteReport s{"duals", perturb, {}};
    for (const auto& m : catalog_modules(cat)) {
        std::string e = key(*m);
        guarded(s, e, "dual of composition", [&] {
            int triples = 0, bad = 0;
            std::string detail;
            for (int x = 0; x < m->C().rank(); ++x)
                for (int p = 0; p < m->size(); ++p) {
                    Report r = verify_duals_lemma(m, x, p, ExactScalar(perturb ? -1 : 1));
                    ++triples;
                    if (!r.ok()) {
                        ++bad;
                        if (detail.empty())
                            detail = first(r);
                    }
                }
            if (perturb)
                s.rows.push_back({e, "negated identification", bad == triples,
                                  std::to_string(bad) + "/" + std::to_string(triples) + " detected"});
            else
                s.rows.push_back({e, "dual of composition", bad == 0,
                                  bad == 0 ? std::to_string(triples) + " pairs (X, m), all simples N" : detail});
        });
    }
    return s;
}

SuiteReport rescaling_suite(const Catalog& cat, std::uint32_t seed, bool perturb)
{
    SuiteReport s{"rescaling", perturb, {}};
    std::mt19937 rng(seed);
    for (const auto& m : catalog_modules(cat)) {
        std::string e = key(*m);
        if (perturb) {
            std::vector<ExactScalar> scale(m->size(), ExactScalar(1));
            scale.back() = ExactScalar(0);
            bool caught = false;
            try {
                dinatural_invariance(m, scale);
            } catch (const InvalidRescale&) {
                caught = true;
            }
            s.rows.push_back({e, "zero rescaling rejected", caught, caught ? "InvalidRescale" : "accepted"});
            continue;
        }
        guarded(s, e, "10 random rescalings", [&] {
            TwoCatAdjoint base = twocat_adjoint(m);
            int bad = 0;
            std::string detail;
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<ExactScalar> scale;
                for (int p = 0; p < m->size(); ++p)
                    scale.push_back(random_nonzero(rng));
                Report r = dinatural_invariance(base, scale);
                if (!r.ok()) {
                    ++bad;
                    if (detail.empty())
                        detail = first(r);
                }
            }
            s.rows.push_back({e, "10 random rescalings", bad == 0, detail});
        });
    }
    return s;
}

ExactScalar sample_gauge(int x, int p)
{
    if (x == 0)
        return ExactScalar(1);
    return p == 0 ? ExactScalar(2) : ExactScalar(-3);
}

SuiteReport equivalence_suite(const Catalog& cat, bool perturb)
{
    SuiteReport s{"equivalence", perturb, {}};
    ModulePtr m = cat.module("vecz2", "regular");
    ModulePtr swapped = permuted_module(m, {1, 0}, "regular-swapped");
    ModulePtr gauged = gauge_module(m, sample_gauge, "regular-gauged");
    auto one = [](int, int) { return ExactScalar(1); };
    std::string e = key(*m);
    if (perturb) {
        // The gauge copy with identity coherence is not a module functor, so it must be rejected.
        bool caught = false;
        try {
            equivalent_modules_iso(m, gauged, simple_equivalence(m, gauged, {0, 1}, one));
        } catch (const EquivalenceError&) {
            caught = true;
        }
        s.rows.push_back({e, "gauge copy without coherence rejected", caught, caught ? "EquivalenceError" : "accepted"});
        return s;
    }
    guarded(s, e, "relabeled simples", [&] {
        EquivalenceIso r = equivalent_modules_iso(m, swapped, simple_equivalence(m, swapped, {1, 0}, one));
        s.rows.push_back({e, "relabeled simples", r.report.ok(), first(r.report)});
    });
    guarded(s, e, "gauge-transformed copy", [&] {
        EquivalenceIso r = equivalent_modules_iso(m, gauged, simple_equivalence(m, gauged, {0, 1}, sample_gauge));
        s.rows.push_back({e, "gauge-transformed copy", r.report.ok(), first(r.report)});
    });
    return s;
}

SuiteReport transport_suite(const Catalog& cat, std::uint32_t seed, bool perturb)
{
    SuiteReport s{"transport", perturb, {}};
    std::mt19937 rng(seed);
    for (const char* id : {"fib", "vecz2"}) {
        ModulePtr m = cat.module(id, "regular");
        std::string e = key(*m);
        guarded(s, e, "X (*) A_M", [&] {
            ShimizuAdjoint sa = shimizu_adjoint(m);
            int bad = 0;
            for (int x = 0; x < m->C().rank(); ++x) {
                EndResult end = tensor_end(sa, m->C().simple(x));
                if (perturb)
                    end.pi.back() = end.pi.back().scaled(ExactScalar(0));
                bad += verify_end_universal(end, 20, rng).ok() ? 0 : 1;
            }
            int want = perturb ? m->C().rank() : 0;
            s.rows.push_back({e, perturb ? "X (*) A_M with a zeroed leg" : "X (*) A_M", bad == want,
                              std::to_string(bad) + " of " + std::to_string(m->C().rank()) + " objects X failed"});
        });
        guarded(s, e, "transport along R", [&] {
            TwoCatAdjoint t = twocat_adjoint(m);
            if (perturb)
                t.pi.back() = t.pi.back().scaled(ExactScalar(0));
            Report r = verify_twocat_end(t, 20, rng);
            s.rows.push_back({e, perturb ? "transport along R with a zeroed leg" : "transport along R",
                              perturb ? !r.ok() : r.ok(), first(r)});
        });
    }
    return s;
}

}  // namespace

ModulePtr permuted_module(const ModulePtr& m, const std::vector<int>& perm, const std::string& id)
{
    int r = m->C().rank(), n = m->size();
    std::vector<int> sorted(perm);
    std::sort(sorted.begin(), sorted.end());
    for (int q = 0; q < n; ++q)
        if (static_cast<int>(sorted.size()) != n || sorted[q] != q)
            throw ShapeError("permuted_module needs a permutation of the simples");
    Mult3 a(r, n, n);
    for (int x = 0; x < r; ++x)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                a.at(x, p, q) = m->A(x, perm[p], perm[q]);
    std::vector<std::pair<std::array<int, 4>, ExactMatrix>> blocks;
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    blocks.push_back({{x, y, p, q}, m->Mblock(x, y, perm[p], perm[q])});
    std::vector<std::string> names;
    for (int p : perm)
        names.push_back(m->msimples[p]);
    return std::make_shared<ModuleCategory>(id, m->base, names, a, blocks);
}

ModulePtr gauge_module(const ModulePtr& m, const std::function<ExactScalar(int, int)>& u, const std::string& id)
{
    const FusionCategory& c = m->C();
    int r = c.rank(), n = m->size();
    auto act = [&](int x, int p) {
        int q = simple_label(m->act(c.simple(x), m->msimple(p)));
        if (q < 0)
            throw ShapeError("gauge_module needs an action sending simples to simples");
        return q;
    };
    for (int p = 0; p < n; ++p)
        if (u(c.unit, p) != ExactScalar(1))
            throw ShapeError("gauge_module needs u(1, p) = 1 so the unit constraint survives");
    std::vector<std::pair<std::array<int, 4>, ExactMatrix>> blocks;
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) {
            int xy = simple_label(c.tensor(c.simple(x), c.simple(y)));
            if (xy < 0)
                throw ShapeError("gauge_module needs a pointed base category");
            for (int p = 0; p < n; ++p) {
                int yp = act(y, p), q = act(x, yp);
                ExactScalar s = u(y, p) * u(x, yp) / u(xy, p);
                blocks.push_back({{x, y, p, q}, m->Mblock(x, y, p, q).scaled(s)});
            }
        }
    return std::make_shared<ModuleCategory>(id, m->base, m->msimples, m->A, blocks);
}

EquivalenceData simple_equivalence(const ModulePtr& m, const ModulePtr& m2, const std::vector<int>& image,
                                   const std::function<ExactScalar(int, int)>& scale)
{
    if (static_cast<int>(image.size()) != m->size() || m->size() != m2->size())
        throw ShapeError("simple_equivalence needs a bijection of simples");
    std::vector<int> inv(image.size(), -1);
    for (size_t p = 0; p < image.size(); ++p)
        inv.at(image[p]) = static_cast<int>(p);
    ModuleFunctor x = ModuleFunctor::from_table(m, m2, permutation_table(image), simple_coherence(m, image, scale));
    ModuleFunctor y = ModuleFunctor::from_table(
        m2, m, permutation_table(inv),
        simple_coherence(m2, inv, [&](int a, int q) { return ExactScalar(1) / scale(a, inv[q]); }));
    return {x, y, identity_components(compose(x, y), ModuleFunctor::identity(m2)),
            identity_components(compose(y, x), ModuleFunctor::identity(m))};
}

bool SuiteReport::ok() const
{
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"comparison", "duals", "equivalence", "rescaling", "transport"};
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const Catalog& cat, std::uint32_t seed, bool perturb)
{
    if (name == "all") {
        std::vector<SuiteReport> r;
        for (const auto& n : suite_names())
            r.push_back(run_suite(n, cat, seed, perturb).front());
        return r;
    }
    if (name == "comparison")
        return {comparison_suite(cat, perturb)};
    if (name == "duals")
        return {duals_suite(cat, perturb)};
    if (name == "rescaling")
        return {rescaling_suite(cat, seed, perturb)};
    if (name == "equivalence")
        return {equivalence_suite(cat, perturb)};
    if (name == "transport")
        return {transport_suite(cat, seed, perturb)};
    throw SchemaError("unknown verification suite '" + name + "'");
}

json suite_to_json(const SuiteReport& s)
{
    json rows = json::array();
    for (const auto& r : s.rows)
        rows.push_back({{"entry", r.entry}, {"check", r.check}, {"pass", r.pass}, {"detail", r.detail}});
    return {{"suite", s.suite}, {"perturbed", s.perturbed}, {"ok", s.ok()}, {"rows", rows}};
}

}  // namespace tensoradj
