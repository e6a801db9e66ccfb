#include "tensoradj/center.hpp"

#include "tensoradj/errors.hpp"

namespace tensoradj {

Factoring solve_stacked(const std::vector<Morphism>& legs, const std::vector<Morphism>& targets)
{
    if (legs.empty() || legs.size() != targets.size())
        throw ShapeError("solve_stacked needs one target per leg");
    const Obj& e = legs[0].src;
    const Obj& d = targets[0].src;
    Factoring f{Morphism::zero(d, e), true, true};
    for (size_t a = 0; a < e.size(); ++a) {
        std::vector<ExactMatrix> lp, tp;
        for (size_t k = 0; k < legs.size(); ++k) {
            if (legs[k].src != e || targets[k].src != d || legs[k].tgt != targets[k].tgt)
                throw ShapeError("solve_stacked: legs and targets disagree");
            lp.push_back(legs[k].blocks[a]);
            tp.push_back(targets[k].blocks[a]);
        }
        ExactMatrix A = ExactMatrix::vstack(lp, e[a]), B = ExactMatrix::vstack(tp, d[a]);
        LinearSolution s = solve_linear(A, B);
        if (!s.consistent()) {
            f.exists = f.unique = false;
            return f;
        }
        f.unique = f.unique && s.unique();
        f.h.blocks[a] = s.particular;
    }
    return f;
}

Morphism factor_uniquely(const std::vector<Morphism>& legs, const std::vector<Morphism>& targets,
                         const std::string& what)
{
    Factoring f = solve_stacked(legs, targets);
    if (!f.exists)
        throw TheoremViolation(what + ": no factoring through the dinaturals");
    if (!f.unique)
        throw TheoremViolation(what + ": factoring through the dinaturals is not unique");
    return f.h;
}

Morphism EndResult::at(const Obj& p) const
{
    Obj pp = S(p, p);
    Morphism r = Morphism::zero(object, pp);
    for (int m = 0; m < size; ++m)
        for (int j = 0; j < p[m]; ++j)
            r = r + S_map(summand_projection(p, m, j), summand_inclusion(p, m, j)) * pi[m];
    return r;
}

SumLayout sum_layout(const std::vector<Obj>& parts)
{
    SumLayout s;
    size_t n = parts.empty() ? 0 : parts[0].size();
    s.total.assign(n, 0);
    for (const auto& p : parts)
        for (size_t a = 0; a < n; ++a)
            s.total[a] += p[a];
    Obj off(n, 0);
    for (const auto& p : parts) {
        Morphism in = Morphism::zero(p, s.total), out = Morphism::zero(s.total, p);
        for (size_t a = 0; a < n; ++a) {
            for (int k = 0; k < p[a]; ++k) {
                in.blocks[a].set(off[a] + k, k, ExactScalar(1));
                out.blocks[a].set(k, off[a] + k, ExactScalar(1));
            }
            off[a] += p[a];
        }
        s.inc.push_back(in);
        s.proj.push_back(out);
    }
    return s;
}

EndResult end_internal_hom(const ModulePtr& m, const ModuleFunctor& f)
{
    EndResult e;
    e.size = m->size();
    std::vector<Obj> parts;
    for (int p = 0; p < m->size(); ++p)
        parts.push_back(m->hom(m->msimple(p), f.apply(m->msimple(p))));
    SumLayout s = sum_layout(parts);
    e.object = s.total;
    e.pi = s.proj;
    e.S = [m, f](const Obj& p, const Obj& q) { return m->hom(p, f.apply(q)); };
    e.S_map = [m, f](const Morphism& a, const Morphism& b) { return m->hom_map(a, f.apply(b)); };
    return e;
}

namespace {

Obj random_obj(std::mt19937& rng, int n, int max)
{
    std::uniform_int_distribution<int> d(0, max);
    Obj x(n);
    for (auto& k : x)
        k = d(rng);
    return x;
}

}  // namespace

Report verify_end_universal(const EndResult& e, int trials, std::mt19937& rng)
{
    Report rep;
    int rank = static_cast<int>(e.object.size());
    auto check = [&](const std::vector<Morphism>& family, const Morphism& expected, const std::string& what) {
        Factoring f = solve_stacked(e.pi, family);
        if (!f.exists)
            rep.add(what + ": family does not factor");
        else if (!f.unique)
            rep.add(what + ": factoring is not unique");
        else if (f.h != expected)
            rep.add(what + ": factoring differs from the generating morphism");
    };
    check(e.pi, Morphism::identity(e.object), "own dinaturals");
    ExactScalar lambda = ExactScalar(3) / ExactScalar(2) + ExactScalar::zeta(4);
    std::vector<Morphism> scaled;
    for (const auto& p : e.pi)
        scaled.push_back(p.scaled(lambda));
    check(scaled, Morphism::identity(e.object).scaled(lambda), "rescaled dinaturals");

    for (int t = 0; t < trials; ++t) {
        Obj d = random_obj(rng, rank, 2);
        Morphism h0 = random_morphism(rng, d, e.object);
        std::vector<Morphism> family;
        for (const auto& p : e.pi)
            family.push_back(p * h0);
        check(family, h0, "random family " + std::to_string(t));

        // Dinaturality on composites: S(id_P, f) pi_P = S(f, id_Q) pi_Q for f: P -> Q.
        Obj p = random_obj(rng, e.size, 1), q = random_obj(rng, e.size, 1);
        p[t % e.size] += 1;
        Morphism f = random_morphism(rng, p, q);
        Morphism lhs = e.S_map(Morphism::identity(p), f) * e.at(p);
        Morphism rhs = e.S_map(f, Morphism::identity(q)) * e.at(q);
        if (lhs != rhs)
            rep.add("dinaturality fails on random composite " + std::to_string(t));
    }
    return rep;
}

CenterObject CenterObject::unit(const CategoryPtr& c)
{
    CenterObject u{c, c->unit_obj(), {}};
    for (int a = 0; a < c->rank(); ++a)
        u.sigma.push_back(Morphism::identity(c->simple(a)));
    return u;
}

Morphism CenterObject::at(const Obj& x) const
{
    const FusionCategory& c = *cat;
    Morphism r = Morphism::zero(c.tensor(object, x), c.tensor(x, object));
    Morphism idv = Morphism::identity(object);
    for (int a = 0; a < c.rank(); ++a)
        for (int i = 0; i < x[a]; ++i)
            r = r + c.tensor(summand_inclusion(x, a, i), idv) * sigma[a] * c.tensor(idv, summand_projection(x, a, i));
    return r;
}

Report validate_half_braiding(const CenterObject& v)
{
    Report rep;
    const FusionCategory& c = *v.cat;
    if (static_cast<int>(v.sigma.size()) != c.rank()) {
        rep.add("half-braiding needs one component per simple");
        return rep;
    }
    for (int a = 0; a < c.rank(); ++a) {
        Obj A = c.simple(a);
        const Morphism& s = v.sigma[a];
        if (s.src != c.tensor(v.object, A) || s.tgt != c.tensor(A, v.object)) {
            rep.add("component at " + c.simples[a] + " has the wrong shape");
            return rep;
        }
        if (!s.is_invertible())
            rep.add("component at " + c.simples[a] + " is not invertible");
    }
    if (!v.sigma[c.unit].is_identity())
        rep.add("unit: component at the unit is not the identity");
    const Obj& V = v.object;
    for (int x = 0; x < c.rank(); ++x)
        for (int y = 0; y < c.rank(); ++y) {
            Obj X = c.simple(x), Y = c.simple(y);
            Morphism ix = Morphism::identity(X), iy = Morphism::identity(Y);
            Morphism rhs = c.assoc_inv(X, Y, V) * c.tensor(ix, v.sigma[y]) * c.assoc(X, V, Y) *
                           c.tensor(v.sigma[x], iy) * c.assoc_inv(V, X, Y);
            if (v.at(c.tensor(X, Y)) != rhs)
                rep.add("hexagon fails at (" + c.simples[x] + "," + c.simples[y] + ")");
        }
    return rep;
}

bool is_center_morphism(const Morphism& f, const CenterObject& v, const CenterObject& w)
{
    const FusionCategory& c = *v.cat;
    for (int x = 0; x < c.rank(); ++x) {
        Morphism ix = Morphism::identity(c.simple(x));
        if (c.tensor(ix, f) * v.sigma[x] != w.sigma[x] * c.tensor(f, ix))
            return false;
    }
    return true;
}

std::vector<Morphism> center_hom(const CenterObject& v, const CenterObject& w)
{
    const FusionCategory& c = *v.cat;
    struct Var {
        int a, i, j;
    };
    std::vector<Var> vars;
    for (int a = 0; a < c.rank(); ++a)
        for (int i = 0; i < w.object[a]; ++i)
            for (int j = 0; j < v.object[a]; ++j)
                vars.push_back({a, i, j});
    if (vars.empty())
        return {};
    std::vector<std::vector<ExactScalar>> columns;
    for (const auto& var : vars) {
        Morphism f = Morphism::zero(v.object, w.object);
        f.blocks[var.a].set(var.i, var.j, ExactScalar(1));
        std::vector<ExactScalar> col;
        for (int x = 0; x < c.rank(); ++x) {
            Morphism ix = Morphism::identity(c.simple(x));
            Morphism res = c.tensor(ix, f) * v.sigma[x] - w.sigma[x] * c.tensor(f, ix);
            for (const auto& b : res.blocks)
                for (int i = 0; i < b.rows(); ++i)
                    for (int j = 0; j < b.cols(); ++j)
                        col.push_back(b(i, j));
        }
        columns.push_back(std::move(col));
    }
    ExactMatrix A(static_cast<int>(columns[0].size()), static_cast<int>(vars.size()));
    for (size_t k = 0; k < vars.size(); ++k)
        for (size_t i = 0; i < columns[k].size(); ++i)
            if (!columns[k][i].is_zero())
                A.set(static_cast<int>(i), static_cast<int>(k), columns[k][i]);
    std::vector<Morphism> basis;
    for (const auto& kv : kernel_basis(A)) {
        Morphism f = Morphism::zero(v.object, w.object);
        for (size_t k = 0; k < vars.size(); ++k)
            f.blocks[vars[k].a].set(vars[k].i, vars[k].j, kv(static_cast<int>(k), 0));
        basis.push_back(f);
    }
    return basis;
}

CenterObject center_tensor(const CenterObject& v, const CenterObject& w)
{
    const FusionCategory& c = *v.cat;
    const Obj &V = v.object, &W = w.object;
    CenterObject r{v.cat, c.tensor(V, W), {}};
    Morphism iv = Morphism::identity(V), iw = Morphism::identity(W);
    for (int x = 0; x < c.rank(); ++x) {
        Obj X = c.simple(x);
        r.sigma.push_back(c.assoc(X, V, W) * c.tensor(v.sigma[x], iw) * c.assoc_inv(V, X, W) *
                          c.tensor(iv, w.sigma[x]) * c.assoc(V, W, X));
    }
    return r;
}

Report validate_center_algebra(const CenterAlgebra& a)
{
    Report rep = validate_half_braiding(a.carrier);
    if (!rep.ok())
        return rep;
    const FusionCategory& c = *a.carrier.cat;
    const Obj& A = a.carrier.object;
    Obj AA = c.tensor(A, A);
    if (a.mult.src != AA || a.mult.tgt != A || a.unit.src != c.unit_obj() || a.unit.tgt != A) {
        rep.add("multiplication or unit has the wrong shape");
        return rep;
    }
    Morphism id = Morphism::identity(A);
    if (a.mult * c.tensor(a.mult, id) != a.mult * c.tensor(id, a.mult) * c.assoc(A, A, A))
        rep.add("multiplication is not associative");
    if (!(a.mult * c.tensor(a.unit, id)).is_identity())
        rep.add("unit fails on the left");
    if (!(a.mult * c.tensor(id, a.unit)).is_identity())
        rep.add("unit fails on the right");
    if (!is_center_morphism(a.mult, center_tensor(a.carrier, a.carrier), a.carrier))
        rep.add("multiplication is not a morphism in the center");
    if (!is_center_morphism(a.unit, CenterObject::unit(a.carrier.cat), a.carrier))
        rep.add("unit is not a morphism in the center");
    return rep;
}

}  // namespace tensoradj
