#include "tensoradj/adjoint.hpp"

#include "tensoradj/errors.hpp"

namespace tensoradj {

namespace {

std::string label(const ModuleCategory& m) { return m.C().id + "/" + m.id; }

std::vector<ModuleFunctor> summands(const TwoCatAdjoint& t)
{
    std::vector<ModuleFunctor> parts;
    for (const auto& a : t.duals)
        parts.push_back(compose(a.right, a.left));
    return parts;
}

void compute_sigma2(TwoCatAdjoint& t)
{
    const ModuleCategory& m = *t.module;
    const FusionCategory& c = m.C();
    auto parts = summands(t);
    TwoCatAdjoint::Cache& cache = *t.cache;
    if (cache.weights.empty())
        for (int x = 0; x < c.rank(); ++x) {
            ModuleFunctor rx = right_mult(t.regular, c.simple(x));
            cache.rigidity.push_back(rigidity_adjunction(t.regular, c.simple(x)));
            cache.weights.emplace_back();
            for (int p = 0; p < m.size(); ++p) {
                ModuleFunctor f = compose(t.duals[p].left, rx);
                Adjunction fa = right_adjoint(f);
                ModuleNatTrans dw = whisker(dual_of_composition_iso(t.duals[p], cache.rigidity[x], fa), f);
                cache.weights[x].emplace_back();
                for (const auto& wq : t.pi_weights(f, fa))
                    cache.weights[x][p].push_back(dw * wq);
            }
        }
    t.sigma2.clear();
    for (int x = 0; x < c.rank(); ++x) {
        Obj X = c.simple(x);
        Morphism idx = Morphism::identity(X);
        ModuleFunctor rx = right_mult(t.regular, X);
        const Adjunction& rig = cache.rigidity[x];
        // targets[p][y]: L(y) (*) X -> *R_m R_m (y (*) X)
        std::vector<std::vector<Morphism>> targets(m.size());
        for (int p = 0; p < m.size(); ++p) {
            const auto& wx = cache.weights[x][p];
            ModuleNatTrans w = wx[0] * t.pi[0];
            for (int q = 1; q < m.size(); ++q)
                w = w + wx[q] * t.pi[q];
            for (int y = 0; y < c.rank(); ++y) {
                Obj z = parts[p].apply(c.tensor(c.simple(y), X));
                targets[p].push_back(rig.counit.at(z) * c.tensor(w.comp[y], idx));
            }
        }
        ModuleNatTrans s{compose(rx, t.L), compose(t.L, rx), {}};
        for (int y = 0; y < c.rank(); ++y) {
            Obj yx = c.tensor(c.simple(y), X);
            std::vector<Morphism> legs, tg;
            for (int p = 0; p < m.size(); ++p) {
                legs.push_back(t.pi[p].at(yx));
                tg.push_back(targets[p][y]);
            }
            s.comp.push_back(factor_uniquely(legs, tg, "half-braiding of L at (" + c.simples[x] + "," + c.simples[y] + ")"));
        }
        t.sigma2.push_back(std::move(s));
    }
}

// Product and unit of L(1), determined by the dinaturals; then the image in the center.
void solve_product(TwoCatAdjoint& t)
{
    const FusionCategory& c = t.module->C();
    auto parts = summands(t);
    Obj one = c.unit_obj();
    std::vector<Morphism> legs, mt, ut;
    for (int p = 0; p < t.module->size(); ++p) {
        const Adjunction& a = t.duals[p];
        legs.push_back(t.pi[p].comp[c.unit]);
        ut.push_back(a.unit.comp[c.unit]);
        Morphism pp = t.pi[p].at(parts[p].apply(one)) * t.L.apply(t.pi[p].comp[c.unit]);
        mt.push_back(a.right.apply(a.counit.comp[p]) * pp);
    }
    t.mult2 = factor_uniquely(legs, mt, "product of L");
    t.unit2 = factor_uniquely(legs, ut, "unit of L");
    materialize(t);
}

}  // namespace

ShimizuAdjoint shimizu_adjoint(const ModulePtr& m)
{
    if (!m->indecomposable())
        throw IndecomposabilityError("module " + label(*m) + " is decomposable");
    const FusionCategory& c = m->C();
    ShimizuAdjoint s;
    s.module = m;
    s.end = end_internal_hom(m, ModuleFunctor::identity(m));
    const Obj& A = s.end.object;
    std::vector<Morphism> sigma;
    for (int x = 0; x < c.rank(); ++x) {
        Obj X = c.simple(x);
        Morphism idx = Morphism::identity(X);
        std::vector<Morphism> legs, targets;
        for (int p = 0; p < m->size(); ++p) {
            Obj P = m->msimple(p), XP = m->act(X, P);
            legs.push_back(c.tensor(idx, s.end.pi[p]));
            targets.push_back(m->frak_a(X, P, P) * m->frak_b(X, P, XP) * c.tensor(s.end.at(XP), idx));
        }
        sigma.push_back(factor_uniquely(legs, targets, "half-braiding of A_M at " + c.simples[x]));
    }
    std::vector<Morphism> mt, ut;
    for (int p = 0; p < m->size(); ++p) {
        Obj P = m->msimple(p);
        mt.push_back(m->comp(P) * c.tensor(s.end.pi[p], s.end.pi[p]));
        ut.push_back(m->coev(c.unit_obj(), P));
    }
    s.algebra = {CenterObject{m->base, A, sigma}, factor_uniquely(s.end.pi, mt, "product of A_M"),
                 factor_uniquely(s.end.pi, ut, "unit of A_M")};
    return s;
}

const Adjunction& TwoCatAdjoint::action_adjoint(const Obj& p) const
{
    auto it = cache->action_adjoints.find(p);
    if (it == cache->action_adjoints.end())
        it = cache->action_adjoints.emplace(p, right_adjoint(action_functor(regular, module, p))).first;
    return it->second;
}

std::vector<ModuleNatTrans> TwoCatAdjoint::pi_weights_object(const Obj& p, const Adjunction& pa) const
{
    std::vector<ModuleNatTrans> w;
    for (int q = 0; q < module->size(); ++q) {
        ModuleNatTrans acc = ModuleNatTrans::zero(compose(duals[q].right, duals[q].left), compose(pa.right, pa.left));
        for (int j = 0; j < p[q]; ++j) {
            ModuleNatTrans b = mate(action_transformation(regular, module, summand_projection(p, q, j)), pa, duals[q]);
            ModuleNatTrans a = action_transformation(regular, module, summand_inclusion(p, q, j));
            acc = acc + horizontal(b, a);
        }
        w.push_back(std::move(acc));
    }
    return w;
}

std::vector<ModuleNatTrans> TwoCatAdjoint::pi_weights(const ModuleFunctor& f, const Adjunction& fa) const
{
    Obj p = f.apply(regular->C().unit_obj());
    const Adjunction& pa = action_adjoint(p);
    ModuleNatTrans alpha = point_iso(f, regular);
    ModuleNatTrans k = horizontal(mate(alpha.inverse(), fa, pa), alpha);
    auto w = pi_weights_object(p, pa);
    for (auto& wq : w)
        wq = k * wq;
    return w;
}

namespace {

ModuleNatTrans weighted(const std::vector<ModuleNatTrans>& w, const std::vector<ModuleNatTrans>& pi)
{
    ModuleNatTrans acc = w[0] * pi[0];
    for (size_t q = 1; q < w.size(); ++q)
        acc = acc + w[q] * pi[q];
    return acc;
}

}  // namespace

ModuleNatTrans TwoCatAdjoint::pi_at_object(const Obj& p, const Adjunction& pa) const
{
    return weighted(pi_weights_object(p, pa), pi);
}

ModuleNatTrans TwoCatAdjoint::pi_at(const ModuleFunctor& f, const Adjunction& fa) const
{
    return weighted(pi_weights(f, fa), pi);
}

TwoCatAdjoint twocat_adjoint(const ModulePtr& m, const std::vector<ExactScalar>& scale)
{
    if (!m->indecomposable())
        throw IndecomposabilityError("module " + label(*m) + " is decomposable");
    if (!scale.empty() && static_cast<int>(scale.size()) != m->size())
        throw ShapeError("one rescaling factor per simple of the module is required");
    TwoCatAdjoint t;
    t.module = m;
    t.regular = regular_module(m->base);
    for (int p = 0; p < m->size(); ++p)
        t.duals.push_back(right_adjoint(action_functor(t.regular, m, m->msimple(p))));
    auto parts = summands(t);
    t.L = direct_sum(parts);
    for (int p = 0; p < m->size(); ++p) {
        ModuleNatTrans pr = direct_sum_projection(t.L, parts, p);
        t.pi.push_back(scale.empty() ? pr : pr.scaled(scale[p]));
    }
    compute_sigma2(t);
    solve_product(t);
    return t;
}

TwoCatAdjoint rescaled(const TwoCatAdjoint& t, const std::vector<ExactScalar>& scale)
{
    if (static_cast<int>(scale.size()) != t.module->size())
        throw ShapeError("one rescaling factor per simple of the module is required");
    TwoCatAdjoint r = t;
    for (int p = 0; p < t.module->size(); ++p)
        r.pi[p] = t.pi[p].scaled(scale[p]);
    compute_sigma2(r);
    solve_product(r);
    return r;
}

void materialize(TwoCatAdjoint& t)
{
    const FusionCategory& c = t.module->C();
    Obj one = c.unit_obj(), l1 = t.L.apply(one);
    std::vector<Morphism> sigma;
    for (int x = 0; x < c.rank(); ++x)
        sigma.push_back(t.L.coherence(c.simple(x), one) * t.sigma2[x].comp[c.unit]);
    Morphism product = t.mult2 * t.L.coherence(l1, one).inverse();
    t.phi_image = {CenterObject{t.module->base, l1, sigma}, product, t.unit2};
}

ComparisonIso compare_adjoints(const ShimizuAdjoint& s, const TwoCatAdjoint& t)
{
    const ModuleCategory& m = *s.module;
    const FusionCategory& c = m.C();
    ComparisonIso r;
    std::vector<Morphism> targets;
    for (int p = 0; p < m.size(); ++p)
        targets.push_back(t.pi[p].comp[c.unit]);
    r.phi = factor_uniquely(s.end.pi, targets, "comparison map");
    if (!r.phi.is_invertible())
        r.invertible.add("comparison map is singular");

    const CenterObject& a = s.algebra.carrier;
    const CenterObject& b = t.phi_image.carrier;
    Obj one = c.unit_obj();
    for (int x = 0; x < c.rank(); ++x) {
        Obj X = c.simple(x);
        Morphism idx = Morphism::identity(X);
        if (a.sigma[x] * c.tensor(r.phi, idx) != c.tensor(idx, r.phi) * b.sigma[x])
            r.center.add("comparison map does not commute with the half-braidings at " + c.simples[x]);
        Morphism cx = t.L.coherence(X, one);
        for (int p = 0; p < m.size(); ++p) {
            Obj P = m.msimple(p);
            if (m.frak_a(X, P, P) * t.pi[p].comp[x] != c.tensor(idx, t.pi[p].comp[c.unit]) * cx)
                r.center.add("frak_a (pi_m)_X differs from (id (*) (pi_m)_1) c_{X,1} at (" + c.simples[x] + "," +
                             m.msimples[p] + ")");
        }
    }
    if (s.algebra.mult * c.tensor(r.phi, r.phi) != r.phi * t.phi_image.mult)
        r.algebra.add("comparison map does not intertwine the products");
    if (r.phi * t.phi_image.unit != s.algebra.unit)
        r.algebra.add("comparison map does not preserve the units");
    return r;
}

ComparisonIso compare_adjoints(const ModulePtr& m)
{
    ComparisonIso r = compare_adjoints(shimizu_adjoint(m), twocat_adjoint(m));
    for (const Report* rep : {&r.invertible, &r.center, &r.algebra})
        if (!rep->ok())
            throw TheoremViolation(label(*m) + ": " + rep->violations.front());
    return r;
}

Report dinatural_invariance(const ModulePtr& m, const std::vector<ExactScalar>& scale)
{
    if (static_cast<int>(scale.size()) != m->size())
        throw InvalidRescale("one rescaling factor per simple of the module is required");
    for (const auto& s : scale)
        if (s.is_zero())
            throw InvalidRescale("rescaling factors must be nonzero");
    return dinatural_invariance(twocat_adjoint(m), scale);
}

Report dinatural_invariance(const TwoCatAdjoint& t, const std::vector<ExactScalar>& scale)
{
    const ModulePtr& m = t.module;
    if (static_cast<int>(scale.size()) != m->size())
        throw InvalidRescale("one rescaling factor per simple of the module is required");
    for (const auto& s : scale)
        if (s.is_zero())
            throw InvalidRescale("rescaling factors must be nonzero");
    const FusionCategory& c = m->C();
    TwoCatAdjoint t2 = rescaled(t, scale);
    auto parts = summands(t);
    ModuleNatTrans h = ModuleNatTrans::zero(t.L, t.L);
    for (int p = 0; p < m->size(); ++p)
        h = h + (direct_sum_inclusion(t.L, parts, p) * direct_sum_projection(t.L, parts, p)).scaled(ExactScalar(1) / scale[p]);

    Report rep;
    for (int p = 0; p < m->size(); ++p)
        if (!(t2.pi[p] * h == t.pi[p]))
            rep.add("rescaled dinaturals do not factor through h at " + m->msimples[p]);
    rep.merge(h.check_module(), "h: ");
    for (int x = 0; x < c.rank(); ++x) {
        Obj X = c.simple(x);
        Morphism idx = Morphism::identity(X);
        for (int y = 0; y < c.rank(); ++y) {
            Obj Y = c.simple(y);
            if (t2.sigma2[x].comp[y] * c.tensor(h.comp[y], idx) != h.at(c.tensor(Y, X)) * t.sigma2[x].comp[y])
                rep.add("half-braidings are not intertwined by h at (" + c.simples[x] + "," + c.simples[y] + ")");
        }
    }
    const Morphism& h1 = h.comp[c.unit];
    if (!is_center_morphism(h1, t.phi_image.carrier, t2.phi_image.carrier))
        rep.add("h_1 is not a morphism in the center");
    if (h1 * t.phi_image.mult != t2.phi_image.mult * c.tensor(h1, h1))
        rep.add("h_1 does not intertwine the products");
    if (h1 * t.phi_image.unit != t2.phi_image.unit)
        rep.add("h_1 does not preserve the units");
    rep.merge(validate_half_braiding(t2.phi_image.carrier), "rescaled: ");
    return rep;
}

EquivalenceIso equivalent_modules_iso(const ModulePtr& m, const ModulePtr& m2, const EquivalenceData& d)
{
    if (!same_module(d.X.source, m) || !same_module(d.X.target, m2) || !same_module(d.Y.source, m2) ||
        !same_module(d.Y.target, m))
        throw EquivalenceError("equivalence functors have the wrong endpoints");
    Report bad;
    bad.merge(d.X.validate(), "X: ");
    bad.merge(d.Y.validate(), "Y: ");
    if (!bad.ok())
        throw EquivalenceError(bad.violations.front());
    if (!d.alpha.is_invertible() || !d.beta.is_invertible())
        throw EquivalenceError("alpha and beta must be invertible");
    bad.merge(d.alpha.check_module(), "alpha: ");
    bad.merge(d.beta.check_module(), "beta: ");
    if (!bad.ok())
        throw EquivalenceError(bad.violations.front());

    // Y -| X with unit alpha^{-1} and counit beta (Y alpha X)(YX beta^{-1}); X -| Y symmetrically.
    ModuleNatTrans ai = d.alpha.inverse(), bi = d.beta.inverse();
    Adjunction ay{d.Y, d.X, ai,
                  d.beta * whisker(whisker(d.Y, d.alpha), d.X) * whisker(compose(d.Y, d.X), bi)};
    Adjunction ax{d.X, d.Y, bi,
                  d.alpha * whisker(whisker(d.X, d.beta), d.Y) * whisker(compose(d.X, d.Y), ai)};
    bad.merge(ay.check(), "Y -| X: ");
    bad.merge(ax.check(), "X -| Y: ");
    if (!bad.ok())
        throw EquivalenceError(bad.violations.front());

    const FusionCategory& c = m->C();
    TwoCatAdjoint t = twocat_adjoint(m), t2 = twocat_adjoint(m2);

    // gamma_Z = (id o alpha o id)(delta o id) pi_{Y Z}, and xi_Z f = gamma_Z.
    std::vector<ModuleNatTrans> gamma;
    for (int n = 0; n < m2->size(); ++n) {
        const Adjunction& az = t2.duals[n];
        ModuleFunctor yz = compose(d.Y, az.left);
        Adjunction ayz = right_adjoint(yz);
        ModuleNatTrans delta = dual_of_composition_iso(ay, az, ayz);
        gamma.push_back(whisker(whisker(az.right, d.alpha), az.left) * whisker(delta, yz) * t.pi_at(yz, ayz));
    }
    // delta_W = (id o beta o id)(delta o id) xi_{X W}, and pi_W g = delta_W.
    std::vector<ModuleNatTrans> dw;
    for (int n = 0; n < m->size(); ++n) {
        const Adjunction& aw = t.duals[n];
        ModuleFunctor xw = compose(d.X, aw.left);
        Adjunction axw = right_adjoint(xw);
        ModuleNatTrans delta = dual_of_composition_iso(ax, aw, axw);
        dw.push_back(whisker(whisker(aw.right, d.beta), aw.left) * whisker(delta, xw) * t2.pi_at(xw, axw));
    }
    EquivalenceIso r{ModuleNatTrans{t.L, t2.L, {}}, ModuleNatTrans{t2.L, t.L, {}}, {}};
    for (int y = 0; y < c.rank(); ++y) {
        std::vector<Morphism> legs, tg;
        for (int n = 0; n < m2->size(); ++n) {
            legs.push_back(t2.pi[n].comp[y]);
            tg.push_back(gamma[n].comp[y]);
        }
        r.f.comp.push_back(factor_uniquely(legs, tg, "f at " + c.simples[y]));
        legs.clear();
        tg.clear();
        for (int n = 0; n < m->size(); ++n) {
            legs.push_back(t.pi[n].comp[y]);
            tg.push_back(dw[n].comp[y]);
        }
        r.g.comp.push_back(factor_uniquely(legs, tg, "g at " + c.simples[y]));
    }

    Report& rep = r.report;
    if (!(r.g * r.f == ModuleNatTrans::identity(t.L)))
        rep.add("g f is not the identity");
    if (!(r.f * r.g == ModuleNatTrans::identity(t2.L)))
        rep.add("f g is not the identity");
    rep.merge(r.f.check_module(), "f: ");
    for (int x = 0; x < c.rank(); ++x) {
        Obj X = c.simple(x);
        Morphism idx = Morphism::identity(X);
        for (int y = 0; y < c.rank(); ++y)
            if (r.f.at(c.tensor(c.simple(y), X)) * t.sigma2[x].comp[y] != t2.sigma2[x].comp[y] * c.tensor(r.f.comp[y], idx))
                rep.add("f does not commute with the half-braidings at (" + c.simples[x] + "," + c.simples[y] + ")");
    }
    Obj one = c.unit_obj();
    const Morphism& f1 = r.f.comp[c.unit];
    if (f1 * t.mult2 != t2.mult2 * r.f.at(t2.L.apply(one)) * t.L.apply(f1))
        rep.add("f does not intertwine the products");
    if (f1 * t.unit2 != t2.unit2)
        rep.add("f does not preserve the units");
    if (!is_center_morphism(f1, t.phi_image.carrier, t2.phi_image.carrier))
        rep.add("f_1 is not a morphism in the center");
    if (f1 * t.phi_image.mult != t2.phi_image.mult * c.tensor(f1, f1))
        rep.add("f_1 is not an algebra map");
    return r;
}

std::vector<Morphism> class_functions(const ModulePtr& m)
{
    ShimizuAdjoint am = shimizu_adjoint(m), ac = shimizu_adjoint(regular_module(m->base));
    return center_hom(am.algebra.carrier, ac.algebra.carrier);
}

EndResult tensor_end(const ShimizuAdjoint& s, const Obj& x)
{
    ModulePtr m = s.module;
    CategoryPtr c = m->base;
    Morphism idx = Morphism::identity(x);
    EndResult e;
    e.size = s.end.size;
    e.object = c->tensor(x, s.end.object);
    for (const auto& p : s.end.pi)
        e.pi.push_back(c->tensor(idx, p));
    e.S = [m, c, x](const Obj& p, const Obj& q) { return c->tensor(x, m->hom(p, q)); };
    e.S_map = [m, c, idx](const Morphism& f, const Morphism& g) { return c->tensor(idx, m->hom_map(f, g)); };
    return e;
}

Report verify_twocat_end(const TwoCatAdjoint& t, int trials, std::mt19937& rng)
{
    Report rep;
    const ModuleCategory& m = *t.module;
    const FusionCategory& c = m.C();
    struct Entry {
        std::string name;
        ModuleFunctor f;
        Adjunction fa;
        ModuleNatTrans pi;
    };
    std::vector<Entry> fs;
    auto add = [&](const std::string& name, const ModuleFunctor& f) {
        Adjunction fa = right_adjoint(f);
        fs.push_back({name, f, fa, t.pi_at(f, fa)});
    };
    for (int p = 0; p < m.size(); ++p) {
        add("R_" + m.msimples[p], t.duals[p].left);
        if (!(fs.back().pi == t.pi[p]))
            rep.add("transported dinatural at R_" + m.msimples[p] + " differs from the coordinate one");
    }
    int x = c.rank() - 1;
    add("R_" + m.msimples[0] + " o R_" + c.simples[x], compose(t.duals[0].left, right_mult(t.regular, c.simple(x))));
    Obj p(m.size(), 1);
    p[0] = 2;
    add("R_P", action_functor(t.regular, t.module, p));

    // S(id_F, theta) pi_F = S(theta, id_G) pi_G for module transformations theta: F -> G.
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& a : fs)
        for (const auto& b : fs) {
            auto basis = module_transformations(a.f, b.f);
            for (size_t k = 0; k < basis.size() && k < 2; ++k) {
                const ModuleNatTrans& th = basis[k];
                ModuleNatTrans lhs = horizontal(ModuleNatTrans::identity(a.fa.right), th) * a.pi;
                ModuleNatTrans rhs = horizontal(mate(th, a.fa, b.fa), ModuleNatTrans::identity(b.f)) * b.pi;
                if (!(lhs == rhs))
                    rep.add("dinaturality fails for a transformation " + a.name + " -> " + b.name);
            }
        }

    // Random families pi_F h0 factor uniquely through h0.
    auto endo = module_transformations(t.L, t.L);
    for (int trial = 0; trial < trials; ++trial) {
        ModuleNatTrans h0 = ModuleNatTrans::zero(t.L, t.L);
        for (const auto& b : endo)
            h0 = h0 + b.scaled(ExactScalar(coef(rng)));
        for (int y = 0; y < c.rank(); ++y) {
            std::vector<Morphism> legs, tg;
            for (int q = 0; q < m.size(); ++q) {
                legs.push_back(t.pi[q].comp[y]);
                tg.push_back(t.pi[q].comp[y] * h0.comp[y]);
            }
            Factoring f = solve_stacked(legs, tg);
            if (!f.exists || !f.unique || f.h != h0.comp[y])
                rep.add("random family " + std::to_string(trial) + " does not factor uniquely at " + c.simples[y]);
        }
    }
    return rep;
}

}  // namespace tensoradj
