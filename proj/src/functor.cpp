#include "tensoradj/functor.hpp"

#include "tensoradj/catalog.hpp"
#include "tensoradj/errors.hpp"

#include <random>

namespace tensoradj {

namespace {

const Obj kOne{1};

Obj table_apply(const TableFunctor& t, const Obj& m) { return Product(m, kOne, t.T).out(); }

Morphism table_apply(const TableFunctor& t, const Morphism& f)
{
    return tensor_morphisms(f, Morphism::identity(kOne), t.T);
}

// Scatters the coherence blocks at simples into c_{X,M} for arbitrary objects.
Morphism table_coherence(const TableFunctor& t, const Obj& x, const Obj& m)
{
    const ModuleCategory& s = *t.source;
    const ModuleCategory& u = *t.target;
    int ns = s.size(), nt = u.size(), r = s.C().rank();
    Product xm(x, m, s.A);
    Product fxm(xm.out(), kOne, t.T);
    Product fm(m, kOne, t.T);
    Product xfm(x, fm.out(), u.A);
    Morphism res = Morphism::zero(fxm.out(), xfm.out());
    for (int a = 0; a < r; ++a) {
        if (!x[a])
            continue;
        for (int p = 0; p < ns; ++p) {
            if (!m[p])
                continue;
            const Morphism& c = t.coh[static_cast<size_t>(a) * ns + p];
            Obj sp = simple_obj(ns, p);
            Obj lfm_obj = Product(sp, kOne, t.T).out();
            for (int i = 0; i < x[a]; ++i)
                for (int j = 0; j < m[p]; ++j)
                    for (int n = 0; n < nt; ++n) {
                        const ExactMatrix& blk = c.blocks[n];
                        if (blk.rows() == 0)
                            continue;
                        // rows (q, l, gamma) of x (.) F(p); columns (e, alpha, beta) of F(x (.) p)
                        std::vector<int> rows, cols;
                        for (int q = 0; q < nt; ++q)
                            for (int l = 0; l < lfm_obj[q]; ++l)
                                for (int g = 0; g < u.A(a, q, n); ++g)
                                    rows.push_back(xfm.pos(n, a, i, q, fm.pos(q, p, j, 0, 0, l), g));
                        for (int e = 0; e < ns; ++e)
                            for (int al = 0; al < s.A(a, p, e); ++al)
                                for (int be = 0; be < t.T(e, 0, n); ++be)
                                    cols.push_back(fxm.pos(n, e, xm.pos(e, a, i, p, j, al), 0, 0, be));
                        if (static_cast<int>(rows.size()) != blk.rows() || static_cast<int>(cols.size()) != blk.cols())
                            throw ShapeError("functor coherence block has the wrong shape");
                        for (size_t ri = 0; ri < rows.size(); ++ri)
                            for (size_t ci = 0; ci < cols.size(); ++ci)
                                if (!blk(static_cast<int>(ri), static_cast<int>(ci)).is_zero())
                                    res.blocks[n].set(rows[ri], cols[ci], blk(static_cast<int>(ri), static_cast<int>(ci)));
                    }
        }
    }
    return res;
}

std::vector<std::vector<int>> transpose_table(const std::vector<std::vector<int>>& t, int rows, int cols)
{
    std::vector<std::vector<int>> r(cols, std::vector<int>(rows, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            r[j][i] = t[i][j];
    return r;
}

std::string key_of(const ModuleCategory& m) { return m.C().id + "/" + m.id; }

}  // namespace

bool same_module(const ModulePtr& a, const ModulePtr& b) { return a == b || (a && b && a->same_data(*b)); }

ModuleFunctor ModuleFunctor::identity(ModulePtr m)
{
    ModuleFunctor f;
    f.source = m;
    f.target = m;
    return f;
}

ModuleFunctor ModuleFunctor::from_table(ModulePtr source, ModulePtr target, const std::vector<std::vector<int>>& t,
                                        std::vector<Morphism> coh)
{
    int ns = source->size(), nt = target->size();
    if (static_cast<int>(t.size()) != ns)
        throw ShapeError("functor table has the wrong number of rows");
    auto tf = std::make_shared<TableFunctor>();
    tf->source = source;
    tf->target = target;
    tf->T = Mult3(ns, 1, nt);
    for (int m = 0; m < ns; ++m) {
        if (static_cast<int>(t[m].size()) != nt)
            throw ShapeError("functor table has the wrong number of columns");
        for (int n = 0; n < nt; ++n) {
            if (t[m][n] < 0)
                throw ShapeError("negative multiplicity in functor table");
            tf->T.at(m, 0, n) = t[m][n];
        }
    }
    if (!coh.empty() && static_cast<int>(coh.size()) != source->C().rank() * ns)
        throw ShapeError("functor coherence has the wrong number of blocks");
    tf->coh = std::move(coh);
    ModuleFunctor f;
    f.source = source;
    f.target = target;
    f.factors.push_back(tf);
    return f;
}

std::vector<std::vector<int>> ModuleFunctor::table() const
{
    int ns = source->size();
    std::vector<std::vector<int>> r(ns);
    for (int m = 0; m < ns; ++m)
        r[m] = apply(source->msimple(m));
    return r;
}

Obj ModuleFunctor::apply(const Obj& m) const
{
    Obj r = m;
    for (const auto& f : factors)
        r = table_apply(*f, r);
    return r;
}

Morphism ModuleFunctor::apply(const Morphism& f) const
{
    Morphism r = f;
    for (const auto& t : factors)
        r = table_apply(*t, r);
    return r;
}

Morphism ModuleFunctor::coherence(const Obj& x, const Obj& m) const
{
    Morphism c = Morphism::identity(source->act(x, m));
    Obj cur = m;
    for (const auto& t : factors) {
        if (t->coh.empty())
            throw AdjunctionError("functor coherence requested before it was synthesized");
        c = table_coherence(*t, x, cur) * table_apply(*t, c);
        cur = table_apply(*t, cur);
    }
    return c;
}

ModuleFunctor ModuleFunctor::flatten() const
{
    ModuleFunctor g = from_table(source, target, table(), {});
    ModuleNatTrans j{g, *this, {}};
    for (int m = 0; m < source->size(); ++m)
        j.comp.push_back(Morphism::identity(apply(source->msimple(m))));
    const FusionCategory& c = source->C();
    std::vector<Morphism> coh;
    for (int x = 0; x < c.rank(); ++x)
        for (int m = 0; m < source->size(); ++m) {
            Obj X = c.simple(x), M = source->msimple(m);
            coh.push_back(coherence(X, M) * j.at(source->act(X, M)));
        }
    return from_table(source, target, table(), std::move(coh));
}

Report ModuleFunctor::validate() const
{
    Report rep;
    const FusionCategory& c = source->C();
    int r = c.rank(), ns = source->size();
    for (int x = 0; x < r; ++x)
        for (int m = 0; m < ns; ++m) {
            Morphism cx = coherence(c.simple(x), source->msimple(m));
            if (x == c.unit && !cx.is_identity())
                rep.add("unit: coherence at (" + c.simples[x] + "," + source->msimples[m] + ") is not the identity");
            if (!cx.is_invertible())
                rep.add("coherence at (" + c.simples[x] + "," + source->msimples[m] + ") is singular");
        }
    if (!rep.ok())
        return rep;
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            for (int m = 0; m < ns; ++m) {
                Obj X = c.simple(x), Y = c.simple(y), M = source->msimple(m);
                Morphism lhs = target->act(Morphism::identity(X), coherence(Y, M)) * coherence(X, source->act(Y, M)) *
                               apply(source->massoc(X, Y, M));
                Morphism rhs = target->massoc(X, Y, apply(M)) * coherence(c.tensor(X, Y), M);
                if (lhs != rhs)
                    rep.add("module functor axiom fails at (" + c.simples[x] + "," + c.simples[y] + "," +
                            source->msimples[m] + ")");
            }
    return rep;
}

ModuleFunctor compose(const ModuleFunctor& g, const ModuleFunctor& f)
{
    if (!same_module(f.target, g.source))
        throw ShapeError("cannot compose functors: " + key_of(*f.target) + " is not " + key_of(*g.source));
    ModuleFunctor r;
    r.source = f.source;
    r.target = g.target;
    r.factors = f.factors;
    r.factors.insert(r.factors.end(), g.factors.begin(), g.factors.end());
    return r;
}

ModuleFunctor direct_sum(const std::vector<ModuleFunctor>& fs)
{
    if (fs.empty())
        throw ShapeError("direct sum of no functors");
    ModulePtr src = fs[0].source, tgt = fs[0].target;
    int ns = src->size(), nt = tgt->size();
    std::vector<std::vector<std::vector<int>>> tabs;
    std::vector<std::vector<int>> total(ns, std::vector<int>(nt, 0));
    for (const auto& f : fs) {
        if (!same_module(f.source, src) || !same_module(f.target, tgt))
            throw ShapeError("direct sum of functors with different endpoints");
        tabs.push_back(f.table());
        for (int m = 0; m < ns; ++m)
            for (int n = 0; n < nt; ++n)
                total[m][n] += tabs.back()[m][n];
    }
    ModuleFunctor g = ModuleFunctor::from_table(src, tgt, total, {});
    std::vector<ModuleNatTrans> inc, proj;
    for (size_t s = 0; s < fs.size(); ++s) {
        inc.push_back(direct_sum_inclusion(g, fs, s));
        proj.push_back(direct_sum_projection(g, fs, s));
    }
    const FusionCategory& c = src->C();
    std::vector<Morphism> coh;
    for (int x = 0; x < c.rank(); ++x)
        for (int m = 0; m < ns; ++m) {
            Obj X = c.simple(x), M = src->msimple(m), XM = src->act(X, M);
            Morphism acc = Morphism::zero(g.apply(XM), tgt->act(X, g.apply(M)));
            for (size_t s = 0; s < fs.size(); ++s)
                acc = acc + tgt->act(Morphism::identity(X), inc[s].comp[m]) * fs[s].coherence(X, M) * proj[s].at(XM);
            coh.push_back(acc);
        }
    return ModuleFunctor::from_table(src, tgt, total, std::move(coh));
}

ModuleNatTrans direct_sum_inclusion(const ModuleFunctor& sum, const std::vector<ModuleFunctor>& fs, size_t s)
{
    int ns = sum.source->size(), nt = sum.target->size();
    ModuleNatTrans j{fs[s], sum, {}};
    for (int m = 0; m < ns; ++m) {
        Obj M = sum.source->msimple(m), part = fs[s].apply(M);
        Morphism in = Morphism::zero(part, sum.apply(M));
        for (int n = 0; n < nt; ++n) {
            int off = 0;
            for (size_t t = 0; t < s; ++t)
                off += fs[t].apply(M)[n];
            for (int k = 0; k < part[n]; ++k)
                in.blocks[n].set(off + k, k, ExactScalar(1));
        }
        j.comp.push_back(in);
    }
    return j;
}

ModuleNatTrans direct_sum_projection(const ModuleFunctor& sum, const std::vector<ModuleFunctor>& fs, size_t s)
{
    ModuleNatTrans j = direct_sum_inclusion(sum, fs, s);
    ModuleNatTrans p{sum, fs[s], {}};
    for (const auto& in : j.comp) {
        Morphism out{in.tgt, in.src, {}};
        for (const auto& b : in.blocks)
            out.blocks.push_back(b.transpose());
        p.comp.push_back(out);
    }
    return p;
}

ModuleNatTrans ModuleNatTrans::zero(const ModuleFunctor& f, const ModuleFunctor& g)
{
    ModuleNatTrans t{f, g, {}};
    for (int m = 0; m < f.source->size(); ++m)
        t.comp.push_back(Morphism::zero(f.apply(f.source->msimple(m)), g.apply(f.source->msimple(m))));
    return t;
}

ModuleNatTrans ModuleNatTrans::identity(const ModuleFunctor& f)
{
    ModuleNatTrans t{f, f, {}};
    for (int m = 0; m < f.source->size(); ++m)
        t.comp.push_back(Morphism::identity(f.apply(f.source->msimple(m))));
    return t;
}

Morphism ModuleNatTrans::at(const Obj& m) const
{
    int ns = source.source->size();
    if (total_dim(m) == 1)
        for (int p = 0; p < ns; ++p)
            if (m[p] == 1)
                return comp[p];
    Morphism r = Morphism::zero(source.apply(m), target.apply(m));
    for (int p = 0; p < ns; ++p)
        for (int j = 0; j < m[p]; ++j)
            r = r + target.apply(summand_inclusion(m, p, j)) * comp[p] * source.apply(summand_projection(m, p, j));
    return r;
}

bool ModuleNatTrans::is_invertible() const
{
    for (const auto& c : comp)
        if (!c.is_invertible())
            return false;
    return true;
}

ModuleNatTrans ModuleNatTrans::inverse() const
{
    ModuleNatTrans r{target, source, {}};
    for (const auto& c : comp)
        r.comp.push_back(c.inverse());
    return r;
}

ModuleNatTrans ModuleNatTrans::scaled(const ExactScalar& s) const
{
    ModuleNatTrans r{source, target, {}};
    for (const auto& c : comp)
        r.comp.push_back(c.scaled(s));
    return r;
}

Report ModuleNatTrans::check_module() const
{
    Report rep;
    const ModuleCategory& src = *source.source;
    const ModuleCategory& tgt = *source.target;
    const FusionCategory& c = src.C();
    for (int x = 0; x < c.rank(); ++x)
        for (int m = 0; m < src.size(); ++m) {
            Obj X = c.simple(x), M = src.msimple(m);
            Morphism lhs = target.coherence(X, M) * at(src.act(X, M));
            Morphism rhs = tgt.act(Morphism::identity(X), comp[m]) * source.coherence(X, M);
            if (lhs != rhs)
                rep.add("module transformation condition fails at (" + c.simples[x] + "," + src.msimples[m] + ")");
        }
    return rep;
}

ModuleNatTrans operator*(const ModuleNatTrans& b, const ModuleNatTrans& a)
{
    ModuleNatTrans r{a.source, b.target, {}};
    for (size_t m = 0; m < a.comp.size(); ++m)
        r.comp.push_back(b.comp[m] * a.comp[m]);
    return r;
}

ModuleNatTrans operator+(const ModuleNatTrans& a, const ModuleNatTrans& b)
{
    ModuleNatTrans r{a.source, a.target, {}};
    for (size_t m = 0; m < a.comp.size(); ++m)
        r.comp.push_back(a.comp[m] + b.comp[m]);
    return r;
}

ModuleNatTrans whisker(const ModuleFunctor& h, const ModuleNatTrans& a)
{
    ModuleNatTrans r{compose(h, a.source), compose(h, a.target), {}};
    for (const auto& c : a.comp)
        r.comp.push_back(h.apply(c));
    return r;
}

ModuleNatTrans whisker(const ModuleNatTrans& a, const ModuleFunctor& k)
{
    ModuleNatTrans r{compose(a.source, k), compose(a.target, k), {}};
    for (int m = 0; m < k.source->size(); ++m)
        r.comp.push_back(a.at(k.apply(k.source->msimple(m))));
    return r;
}

ModuleNatTrans horizontal(const ModuleNatTrans& b, const ModuleNatTrans& a)
{
    return whisker(b, a.target) * whisker(b.source, a);
}

std::vector<ModuleNatTrans> module_transformations(const ModuleFunctor& f, const ModuleFunctor& g)
{
    const ModuleCategory& src = *f.source;
    const ModuleCategory& tgt = *f.target;
    const FusionCategory& c = src.C();
    int ns = src.size(), nt = tgt.size();
    std::vector<Obj> fm(ns), gm(ns);
    for (int m = 0; m < ns; ++m) {
        fm[m] = f.apply(src.msimple(m));
        gm[m] = g.apply(src.msimple(m));
    }
    struct Var {
        int m, n, i, j;
    };
    std::vector<Var> vars;
    for (int m = 0; m < ns; ++m)
        for (int n = 0; n < nt; ++n)
            for (int i = 0; i < gm[m][n]; ++i)
                for (int j = 0; j < fm[m][n]; ++j)
                    vars.push_back({m, n, i, j});
    auto zero = [&]() {
        ModuleNatTrans t{f, g, {}};
        for (int m = 0; m < ns; ++m)
            t.comp.push_back(Morphism::zero(fm[m], gm[m]));
        return t;
    };
    if (vars.empty())
        return {};
    std::vector<std::pair<Morphism, Morphism>> cd;
    for (int x = 0; x < c.rank(); ++x)
        for (int m = 0; m < ns; ++m)
            cd.push_back({f.coherence(c.simple(x), src.msimple(m)), g.coherence(c.simple(x), src.msimple(m))});
    std::vector<std::vector<ExactScalar>> columns;
    for (const auto& v : vars) {
        ModuleNatTrans t = zero();
        t.comp[v.m].blocks[v.n].set(v.i, v.j, ExactScalar(1));
        std::vector<ExactScalar> col;
        size_t k = 0;
        for (int x = 0; x < c.rank(); ++x)
            for (int m = 0; m < ns; ++m, ++k) {
                Obj X = c.simple(x), M = src.msimple(m);
                Morphism res = cd[k].second * t.at(src.act(X, M)) - tgt.act(Morphism::identity(X), t.comp[m]) * cd[k].first;
                for (const auto& b : res.blocks)
                    for (int i = 0; i < b.rows(); ++i)
                        for (int j = 0; j < b.cols(); ++j)
                            col.push_back(b(i, j));
            }
        columns.push_back(col);
    }
    int rows = static_cast<int>(columns[0].size());
    ExactMatrix a(rows, static_cast<int>(vars.size()));
    for (size_t v = 0; v < vars.size(); ++v)
        for (int i = 0; i < rows; ++i)
            if (!columns[v][i].is_zero())
                a.set(i, static_cast<int>(v), columns[v][i]);
    std::vector<ModuleNatTrans> basis;
    for (const auto& k : kernel_basis(a)) {
        ModuleNatTrans t = zero();
        for (size_t v = 0; v < vars.size(); ++v)
            t.comp[vars[v].m].blocks[vars[v].n].set(vars[v].i, vars[v].j, k(static_cast<int>(v), 0));
        basis.push_back(t);
    }
    return basis;
}

std::optional<ModuleNatTrans> find_natural_iso(const ModuleFunctor& f, const ModuleFunctor& g)
{
    auto basis = module_transformations(f, g);
    if (basis.empty())
        return std::nullopt;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(1, 9);
    for (int attempt = 0; attempt < 32; ++attempt) {
        ModuleNatTrans t = basis[0].scaled(ExactScalar(attempt == 0 ? 1 : d(rng)));
        for (size_t k = 1; k < basis.size(); ++k)
            t = t + basis[k].scaled(ExactScalar(attempt == 0 ? 1 : d(rng)));
        if (t.is_invertible())
            return t;
    }
    return std::nullopt;
}

Report Adjunction::check() const
{
    Report rep;
    rep.merge(left.validate(), "left functor: ");
    rep.merge(right.validate(), "right functor: ");
    if (!rep.ok())
        return rep;
    for (int m = 0; m < left.source->size(); ++m) {
        Obj M = left.source->msimple(m);
        if (!(counit.at(left.apply(M)) * left.apply(unit.comp[m])).is_identity())
            rep.add("triangle (counit o F)(F o unit) fails at " + left.source->msimples[m]);
    }
    for (int n = 0; n < right.source->size(); ++n) {
        Obj N = right.source->msimple(n);
        if (!(right.apply(counit.comp[n]) * unit.at(right.apply(N))).is_identity())
            rep.add("triangle (G o counit)(unit o G) fails at " + right.source->msimples[n]);
    }
    rep.merge(unit.check_module(), "unit: ");
    rep.merge(counit.check_module(), "counit: ");
    return rep;
}

Adjunction right_adjoint(const ModuleFunctor& f)
{
    ModulePtr src = f.source, tgt = f.target;
    int ns = src->size(), nt = tgt->size();
    auto t = f.table();
    auto tt = transpose_table(t, ns, nt);
    ModuleFunctor g0 = ModuleFunctor::from_table(tgt, src, tt, {});

    std::vector<Morphism> eta, eps;
    for (int m = 0; m < ns; ++m) {
        Obj fm = f.apply(src->msimple(m));
        Obj gfm = g0.apply(fm);
        Morphism u = Morphism::zero(src->msimple(m), gfm);
        for (int n = 0; n < nt; ++n)
            for (int j = 0; j < fm[n]; ++j)
                u = u + g0.apply(summand_inclusion(fm, n, j)) * summand_inclusion(g0.apply(tgt->msimple(n)), m, j);
        eta.push_back(u);
    }
    for (int n = 0; n < nt; ++n) {
        Obj gn = g0.apply(tgt->msimple(n));
        Morphism e = Morphism::zero(f.apply(gn), tgt->msimple(n));
        for (int m = 0; m < ns; ++m)
            for (int b = 0; b < gn[m]; ++b)
                e = e + summand_projection(f.apply(src->msimple(m)), n, b) * f.apply(summand_projection(gn, m, b));
        eps.push_back(e);
    }
    ModuleNatTrans eta0{ModuleFunctor::identity(src), compose(g0, f), eta};

    const FusionCategory& c = src->C();
    std::vector<Morphism> coh;
    for (int x = 0; x < c.rank(); ++x)
        for (int n = 0; n < nt; ++n) {
            Obj X = c.simple(x), gn = g0.apply(tgt->msimple(n));
            Obj xgn = src->act(X, gn);
            Morphism l = g0.apply(tgt->act(Morphism::identity(X), eps[n])) * g0.apply(f.coherence(X, gn)) * eta0.at(xgn);
            try {
                coh.push_back(l.inverse());
            } catch (const DivisionByZero&) {
                throw AdjunctionError("right adjoint: mate of the coherence is singular at (" + c.simples[x] + "," +
                                      tgt->msimples[n] + ")");
            }
        }
    ModuleFunctor g = ModuleFunctor::from_table(tgt, src, tt, std::move(coh));
    Adjunction a{f, g, {ModuleFunctor::identity(src), compose(g, f), eta}, {compose(f, g), ModuleFunctor::identity(tgt), eps}};
    return a;
}

Adjunction left_adjoint(const ModuleFunctor& f)
{
    ModulePtr src = f.source, tgt = f.target;
    int ns = src->size(), nt = tgt->size();
    auto t = f.table();
    auto tt = transpose_table(t, ns, nt);
    ModuleFunctor k0 = ModuleFunctor::from_table(tgt, src, tt, {});

    std::vector<Morphism> eta, eps;
    for (int n = 0; n < nt; ++n) {
        Obj kn = k0.apply(tgt->msimple(n));
        Morphism u = Morphism::zero(tgt->msimple(n), f.apply(kn));
        for (int m = 0; m < ns; ++m)
            for (int b = 0; b < kn[m]; ++b)
                u = u + f.apply(summand_inclusion(kn, m, b)) * summand_inclusion(f.apply(src->msimple(m)), n, b);
        eta.push_back(u);
    }
    for (int m = 0; m < ns; ++m) {
        Obj fm = f.apply(src->msimple(m));
        Morphism e = Morphism::zero(k0.apply(fm), src->msimple(m));
        for (int n = 0; n < nt; ++n)
            for (int j = 0; j < fm[n]; ++j)
                e = e + summand_projection(k0.apply(tgt->msimple(n)), m, j) * k0.apply(summand_projection(fm, n, j));
        eps.push_back(e);
    }
    ModuleNatTrans eps0{compose(k0, f), ModuleFunctor::identity(src), eps};

    const FusionCategory& c = src->C();
    std::vector<Morphism> coh;
    for (int x = 0; x < c.rank(); ++x)
        for (int n = 0; n < nt; ++n) {
            Obj X = c.simple(x), kn = k0.apply(tgt->msimple(n));
            Morphism cinv;
            try {
                cinv = f.coherence(X, kn).inverse();
            } catch (const DivisionByZero&) {
                throw AdjunctionError("left adjoint: functor coherence is singular");
            }
            coh.push_back(eps0.at(src->act(X, kn)) * k0.apply(cinv) * k0.apply(tgt->act(Morphism::identity(X), eta[n])));
        }
    ModuleFunctor k = ModuleFunctor::from_table(tgt, src, tt, std::move(coh));
    return Adjunction{k, f, {ModuleFunctor::identity(tgt), compose(f, k), eta}, {compose(k, f), ModuleFunctor::identity(src), eps}};
}

Adjunction compose_adjunctions(const Adjunction& f, const Adjunction& g)
{
    ModuleFunctor left = compose(f.left, g.left), right = compose(g.right, f.right);
    ModuleNatTrans unit{ModuleFunctor::identity(g.left.source), compose(right, left), {}};
    for (int m = 0; m < g.left.source->size(); ++m)
        unit.comp.push_back(g.right.apply(f.unit.at(g.left.apply(g.left.source->msimple(m)))) * g.unit.comp[m]);
    ModuleNatTrans counit{compose(left, right), ModuleFunctor::identity(f.left.target), {}};
    for (int n = 0; n < f.left.target->size(); ++n)
        counit.comp.push_back(f.counit.comp[n] * f.left.apply(g.counit.at(f.right.apply(f.left.target->msimple(n)))));
    return Adjunction{left, right, unit, counit};
}

ModuleNatTrans mate(const ModuleNatTrans& a, const Adjunction& fa, const Adjunction& ga)
{
    ModuleNatTrans r{ga.right, fa.right, {}};
    for (int n = 0; n < ga.right.source->size(); ++n) {
        Obj gn = ga.right.apply(ga.right.source->msimple(n));
        r.comp.push_back(fa.right.apply(ga.counit.comp[n]) * fa.right.apply(a.at(gn)) * fa.unit.at(gn));
    }
    return r;
}

ModuleNatTrans dual_of_composition_iso(const Adjunction& f, const Adjunction& g, const Adjunction& fg)
{
    ModuleNatTrans r{fg.right, compose(g.right, f.right), {}};
    for (int n = 0; n < fg.right.source->size(); ++n) {
        Obj q = fg.right.apply(fg.right.source->msimple(n));
        Morphism s1 = g.unit.at(q);
        Morphism s2 = g.right.apply(f.unit.at(g.left.apply(q)));
        Morphism s3 = g.right.apply(f.right.apply(fg.counit.comp[n]));
        r.comp.push_back(s3 * s2 * s1);
    }
    return r;
}

ModuleNatTrans dual_of_composition_iso(const ModuleFunctor& f, const ModuleFunctor& g)
{
    return dual_of_composition_iso(right_adjoint(f), right_adjoint(g), right_adjoint(compose(f, g)));
}

ModulePtr regular_module(const CategoryPtr& c) { return build_module_regular(c); }

ModuleFunctor action_functor(const ModulePtr& regular, const ModulePtr& m, const Obj& p)
{
    const FusionCategory& c = regular->C();
    int r = c.rank();
    std::vector<std::vector<int>> t(r);
    for (int y = 0; y < r; ++y)
        t[y] = m->act(c.simple(y), p);
    std::vector<Morphism> coh;
    for (int z = 0; z < r; ++z)
        for (int y = 0; y < r; ++y)
            coh.push_back(m->massoc(c.simple(z), c.simple(y), p));
    return ModuleFunctor::from_table(regular, m, t, std::move(coh));
}

ModuleNatTrans action_transformation(const ModulePtr& regular, const ModulePtr& m, const Morphism& f)
{
    const FusionCategory& c = regular->C();
    ModuleNatTrans t{action_functor(regular, m, f.src), action_functor(regular, m, f.tgt), {}};
    for (int y = 0; y < c.rank(); ++y)
        t.comp.push_back(m->act(Morphism::identity(c.simple(y)), f));
    return t;
}

Adjunction rigidity_adjunction(const ModulePtr& regular, const Obj& x)
{
    const FusionCategory& c = regular->C();
    Obj xd = c.dual_obj(x);
    ModuleFunctor rx = right_mult(regular, x), rxd = right_mult(regular, xd);
    std::vector<Morphism> eta, eps;
    for (int y = 0; y < c.rank(); ++y) {
        Obj Y = c.simple(y);
        eta.push_back(c.assoc_inv(Y, x, xd) * c.tensor(Morphism::identity(Y), c.coev(x)));
        eps.push_back(c.tensor(Morphism::identity(Y), c.ev(x)) * c.assoc(Y, xd, x));
    }
    return Adjunction{rx, rxd, {ModuleFunctor::identity(regular), compose(rxd, rx), eta},
                      {compose(rx, rxd), ModuleFunctor::identity(regular), eps}};
}

ModuleNatTrans point_iso(const ModuleFunctor& f, const ModulePtr& regular)
{
    const FusionCategory& c = regular->C();
    Obj p = f.apply(c.unit_obj());
    ModuleNatTrans a{action_functor(regular, f.target, p), f, {}};
    for (int y = 0; y < c.rank(); ++y)
        a.comp.push_back(f.coherence(c.simple(y), c.unit_obj()).inverse());
    return a;
}

Report verify_duals_lemma(const ModulePtr& m, int x, int mm, const ExactScalar& theta_scale)
{
    Report rep;
    ModulePtr reg = regular_module(m->base);
    const FusionCategory& c = m->C();
    Obj X = c.simple(x), M = m->msimple(mm);
    Adjunction rig = rigidity_adjunction(reg, X);
    ModuleFunctor rm = action_functor(reg, m, M);
    Adjunction am = right_adjoint(rm);
    ModuleFunctor comp = compose(rm, rig.left);
    Adjunction ac = right_adjoint(comp);
    ModuleNatTrans delta = dual_of_composition_iso(am, rig, ac);

    Obj p = m->act(X, M);
    ModuleFunctor rp = action_functor(reg, m, p);
    Adjunction ap = right_adjoint(rp);
    ModuleNatTrans theta{comp, rp, {}};
    for (int y = 0; y < c.rank(); ++y)
        theta.comp.push_back(m->massoc(c.simple(y), X, M).scaled(theta_scale));
    ModuleNatTrans identify = mate(theta, ac, ap);

    std::string at = "(" + c.simples[x] + "," + m->msimples[mm] + ",";
    for (int n = 0; n < m->size(); ++n) {
        Morphism lhs = delta.comp[n] * identify.comp[n];
        Morphism rhs = m->frak_b1(X, M, m->msimple(n));
        if (lhs != rhs)
            rep.add("dual-of-composition isomorphism differs from frak_b1 at " + at + m->msimples[n] + ")");
        if (!delta.comp[n].is_invertible())
            rep.add("dual-of-composition map is not invertible at " + at + m->msimples[n] + ")");
    }
    return rep;
}

}  // namespace tensoradj
