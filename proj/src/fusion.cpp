#include "tensoradj/fusion.hpp"

#include "tensoradj/errors.hpp"

#include <numeric>
#include <sstream>

namespace tensoradj {

Obj simple_obj(int rank, int a)
{
    Obj x(rank, 0);
    x[a] = 1;
    return x;
}

int total_dim(const Obj& x) { return std::accumulate(x.begin(), x.end(), 0); }

Obj direct_sum(const Obj& x, const Obj& y)
{
    if (x.size() != y.size())
        throw ShapeError("direct sum of objects over different label sets");
    Obj r(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        r[i] = x[i] + y[i];
    return r;
}

Product::Product(const Obj& x, const Obj& y, const Mult3& mu) : x_(x), y_(y), out_(mu.n2, 0), mu_(&mu)
{
    if (static_cast<int>(x.size()) != mu.n0 || static_cast<int>(y.size()) != mu.n1)
        throw ShapeError("product: object does not match multiplicity tensor");
    off_.assign(static_cast<size_t>(mu.n2) * mu.n0 * mu.n1, 0);
    for (int c = 0; c < mu.n2; ++c) {
        int run = 0;
        for (int a = 0; a < mu.n0; ++a)
            for (int b = 0; b < mu.n1; ++b) {
                off_[(static_cast<size_t>(c) * mu.n0 + a) * mu.n1 + b] = run;
                run += x[a] * y[b] * mu(a, b, c);
            }
        out_[c] = run;
    }
}

Morphism Morphism::zero(const Obj& src, const Obj& tgt)
{
    if (src.size() != tgt.size())
        throw ShapeError("morphism between objects over different label sets");
    Morphism m{src, tgt, {}};
    for (size_t i = 0; i < src.size(); ++i)
        m.blocks.emplace_back(tgt[i], src[i]);
    return m;
}

Morphism Morphism::identity(const Obj& x)
{
    Morphism m{x, x, {}};
    for (int k : x)
        m.blocks.push_back(ExactMatrix::identity(k));
    return m;
}

bool Morphism::is_zero() const
{
    for (const auto& b : blocks)
        if (!b.is_zero())
            return false;
    return true;
}

bool Morphism::is_identity() const
{
    if (src != tgt)
        return false;
    for (const auto& b : blocks)
        if (!b.is_identity())
            return false;
    return true;
}

bool Morphism::is_invertible() const
{
    if (src != tgt)
        return false;
    for (const auto& b : blocks)
        if (!tensoradj::is_invertible(b))
            return false;
    return true;
}

Morphism Morphism::inverse() const
{
    if (src != tgt)
        throw DivisionByZero("morphism between non-isomorphic objects");
    Morphism r{tgt, src, {}};
    for (const auto& b : blocks)
        r.blocks.push_back(tensoradj::inverse(b));
    return r;
}

Morphism Morphism::scaled(const ExactScalar& s) const
{
    Morphism r = *this;
    for (auto& b : r.blocks)
        b = b.scaled(s);
    return r;
}

Morphism operator*(const Morphism& g, const Morphism& f)
{
    if (g.src != f.tgt)
        throw ShapeError("composition of non-composable morphisms");
    Morphism r{f.src, g.tgt, {}};
    for (size_t i = 0; i < f.blocks.size(); ++i)
        r.blocks.push_back(g.blocks[i] * f.blocks[i]);
    return r;
}

Morphism operator+(const Morphism& f, const Morphism& g)
{
    if (f.src != g.src || f.tgt != g.tgt)
        throw ShapeError("sum of morphisms with different endpoints");
    Morphism r = f;
    for (size_t i = 0; i < f.blocks.size(); ++i)
        r.blocks[i] = f.blocks[i] + g.blocks[i];
    return r;
}

Morphism operator-(const Morphism& f, const Morphism& g) { return f + g.scaled(ExactScalar(-1)); }

bool operator==(const Morphism& f, const Morphism& g)
{
    return f.src == g.src && f.tgt == g.tgt && f.blocks == g.blocks;
}

Morphism sum_inclusion(const Obj& x, const Obj& y, bool second)
{
    Obj s = direct_sum(x, y);
    Morphism m = Morphism::zero(second ? y : x, s);
    for (size_t a = 0; a < s.size(); ++a) {
        int n = second ? y[a] : x[a];
        int off = second ? x[a] : 0;
        for (int i = 0; i < n; ++i)
            m.blocks[a].set(off + i, i, ExactScalar(1));
    }
    return m;
}

Morphism sum_projection(const Obj& x, const Obj& y, bool second)
{
    Morphism i = sum_inclusion(x, y, second);
    Morphism p{i.tgt, i.src, {}};
    for (const auto& b : i.blocks)
        p.blocks.push_back(b.transpose());
    return p;
}

Morphism direct_sum(const Morphism& f, const Morphism& g)
{
    Morphism r = Morphism::zero(direct_sum(f.src, g.src), direct_sum(f.tgt, g.tgt));
    for (size_t a = 0; a < r.blocks.size(); ++a) {
        r.blocks[a].set_block(0, 0, f.blocks[a]);
        r.blocks[a].set_block(f.tgt[a], f.src[a], g.blocks[a]);
    }
    return r;
}

Morphism summand_inclusion(const Obj& x, int a, int i)
{
    Morphism m = Morphism::zero(simple_obj(static_cast<int>(x.size()), a), x);
    m.blocks[a].set(i, 0, ExactScalar(1));
    return m;
}

Morphism summand_projection(const Obj& x, int a, int i)
{
    Morphism m = Morphism::zero(x, simple_obj(static_cast<int>(x.size()), a));
    m.blocks[a].set(0, i, ExactScalar(1));
    return m;
}

Morphism random_morphism(std::mt19937& rng, const Obj& src, const Obj& tgt)
{
    std::uniform_int_distribution<int> d(-3, 3);
    Morphism m = Morphism::zero(src, tgt);
    for (size_t a = 0; a < src.size(); ++a)
        for (int i = 0; i < tgt[a]; ++i)
            for (int j = 0; j < src[a]; ++j)
                m.blocks[a].set(i, j, ExactScalar(d(rng)));
    return m;
}

Morphism tensor_morphisms(const Morphism& f, const Morphism& g, const Mult3& mu)
{
    Product p(f.src, g.src, mu), q(f.tgt, g.tgt, mu);
    Morphism r = Morphism::zero(p.out(), q.out());
    for (int c = 0; c < mu.n2; ++c)
        for (int a = 0; a < mu.n0; ++a)
            for (int b = 0; b < mu.n1; ++b) {
                int k = mu(a, b, c);
                if (k == 0)
                    continue;
                const ExactMatrix& fa = f.blocks[a];
                const ExactMatrix& gb = g.blocks[b];
                for (int i2 = 0; i2 < fa.rows(); ++i2)
                    for (int i = 0; i < fa.cols(); ++i) {
                        if (fa(i2, i).is_zero())
                            continue;
                        for (int j2 = 0; j2 < gb.rows(); ++j2)
                            for (int j = 0; j < gb.cols(); ++j) {
                                if (gb(j2, j).is_zero())
                                    continue;
                                ExactScalar v = fa(i2, i) * gb(j2, j);
                                for (int al = 0; al < k; ++al)
                                    r.blocks[c].set(q.pos(c, a, i2, b, j2, al), p.pos(c, a, i, b, j, al), v);
                            }
                    }
            }
    return r;
}

int assoc_source_dim(int a, int b, int c, int d, const Mult3& muXY, const Mult3& muEZ)
{
    int s = 0;
    for (int e = 0; e < muXY.n2; ++e)
        s += muXY(a, b, e) * muEZ(e, c, d);
    return s;
}

int assoc_target_dim(int a, int b, int c, int d, const Mult3& muYZ, const Mult3& muXF)
{
    int s = 0;
    for (int f = 0; f < muYZ.n2; ++f)
        s += muYZ(b, c, f) * muXF(a, f, d);
    return s;
}

Morphism assemble_associator(const Obj& x, const Obj& y, const Obj& z, const Mult3& muXY, const Mult3& muEZ,
                             const Mult3& muYZ, const Mult3& muXF, const BlockFn& block)
{
    Product xy(x, y, muXY);
    Product src(xy.out(), z, muEZ);
    Product yz(y, z, muYZ);
    Product tgt(x, yz.out(), muXF);
    if (src.out() != tgt.out())
        throw ShapeError("associator between non-isomorphic objects; fusion rules are not associative");
    Morphism r = Morphism::zero(src.out(), tgt.out());
    std::vector<int> cols, rows;
    for (int a = 0; a < muXY.n0; ++a) {
        if (!x[a])
            continue;
        for (int b = 0; b < muXY.n1; ++b) {
            if (!y[b])
                continue;
            for (int c = 0; c < muEZ.n1; ++c) {
                if (!z[c])
                    continue;
                for (int d = 0; d < muEZ.n2; ++d) {
                    int sd = assoc_source_dim(a, b, c, d, muXY, muEZ);
                    if (sd == 0)
                        continue;
                    const ExactMatrix& m = block(a, b, c, d);
                    for (int i = 0; i < x[a]; ++i)
                        for (int j = 0; j < y[b]; ++j)
                            for (int k = 0; k < z[c]; ++k) {
                                cols.clear();
                                rows.clear();
                                for (int e = 0; e < muXY.n2; ++e)
                                    for (int al = 0; al < muXY(a, b, e); ++al)
                                        for (int be = 0; be < muEZ(e, c, d); ++be)
                                            cols.push_back(src.pos(d, e, xy.pos(e, a, i, b, j, al), c, k, be));
                                for (int f = 0; f < muYZ.n2; ++f)
                                    for (int ga = 0; ga < muYZ(b, c, f); ++ga)
                                        for (int de = 0; de < muXF(a, f, d); ++de)
                                            rows.push_back(tgt.pos(d, a, i, f, yz.pos(f, b, j, c, k, ga), de));
                                for (size_t s = 0; s < rows.size(); ++s)
                                    for (size_t t = 0; t < cols.size(); ++t)
                                        if (!m(static_cast<int>(s), static_cast<int>(t)).is_zero())
                                            r.blocks[d].set(rows[s], cols[t], m(static_cast<int>(s), static_cast<int>(t)));
                            }
                }
            }
        }
    }
    return r;
}

void Report::merge(const Report& o, const std::string& prefix)
{
    for (const auto& v : o.violations)
        violations.push_back(prefix + v);
}

FusionCategory::FusionCategory(std::string id_, std::vector<std::string> simples_, int unit_, std::vector<int> dual_,
                               Mult3 N_, const std::vector<std::pair<std::array<int, 4>, ExactMatrix>>& given)
    : id(std::move(id_)), simples(std::move(simples_)), unit(unit_), dual(std::move(dual_)), N(std::move(N_))
{
    check_schema();
    int r = rank();
    F_.assign(static_cast<size_t>(r) * r * r * r, ExactMatrix());
    std::vector<bool> seen(F_.size(), false);
    for (const auto& [k, m] : given) {
        for (int v : k)
            if (v < 0 || v >= r)
                throw SchemaError("F block label out of range");
        int sd = assoc_source_dim(k[0], k[1], k[2], k[3], N, N);
        int td = assoc_target_dim(k[0], k[1], k[2], k[3], N, N);
        if (m.rows() != td || m.cols() != sd)
            throw SchemaError("F block (" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
                              std::to_string(k[2]) + ";" + std::to_string(k[3]) + ") has wrong shape");
        F_[key(k[0], k[1], k[2], k[3])] = m;
        seen[key(k[0], k[1], k[2], k[3])] = true;
    }
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    if (seen[key(a, b, c, d)])
                        continue;
                    int sd = assoc_source_dim(a, b, c, d, N, N);
                    int td = assoc_target_dim(a, b, c, d, N, N);
                    if (sd != td)
                        throw SchemaError("fusion rules are not associative at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ";" + std::to_string(d) + ")");
                    F_[key(a, b, c, d)] = ExactMatrix::identity(sd);
                }
    synthesize_rigidity();
}

size_t FusionCategory::key(int a, int b, int c, int d) const
{
    size_t r = simples.size();
    return ((static_cast<size_t>(a) * r + b) * r + c) * r + d;
}

void FusionCategory::check_schema() const
{
    int r = rank();
    if (r == 0)
        throw SchemaError("category has no simples");
    if (unit < 0 || unit >= r)
        throw SchemaError("unit label out of range");
    if (static_cast<int>(dual.size()) != r)
        throw SchemaError("dual table has wrong length");
    for (int d : dual)
        if (d < 0 || d >= r)
            throw SchemaError("dual label out of range");
    if (N.n0 != r || N.n1 != r || N.n2 != r)
        throw SchemaError("fusion tensor has wrong shape");
    for (int v : N.v)
        if (v < 0)
            throw SchemaError("negative fusion multiplicity");
}

int FusionCategory::conductor() const
{
    int n = 1;
    for (const auto& m : F_)
        n = lcm_conductor(n, m.conductor());
    return n;
}

const ExactMatrix& FusionCategory::F(int a, int b, int c, int d) const { return F_[key(a, b, c, d)]; }

void FusionCategory::set_F(int a, int b, int c, int d, const ExactMatrix& m)
{
    const ExactMatrix& old = F(a, b, c, d);
    if (m.rows() != old.rows() || m.cols() != old.cols())
        throw ShapeError("replacement F block has wrong shape");
    F_[key(a, b, c, d)] = m;
}

Obj FusionCategory::tensor(const Obj& x, const Obj& y) const { return Product(x, y, N).out(); }

Morphism FusionCategory::assoc(const Obj& x, const Obj& y, const Obj& z) const
{
    return assemble_associator(x, y, z, N, N, N, N, [this](int a, int b, int c, int d) -> const ExactMatrix& {
        return F(a, b, c, d);
    });
}

Obj FusionCategory::dual_obj(const Obj& x) const
{
    Obj r(x.size(), 0);
    for (size_t a = 0; a < x.size(); ++a)
        r[dual[a]] = x[a];
    return r;
}

Morphism FusionCategory::coev(const Obj& x) const
{
    Obj xd = dual_obj(x);
    Product p(x, xd, N);
    Morphism m = Morphism::zero(unit_obj(), p.out());
    for (int a = 0; a < rank(); ++a)
        for (int i = 0; i < x[a]; ++i)
            m.blocks[unit].set(p.pos(unit, a, i, dual[a], i, 0), 0, coev_coeff_[a]);
    return m;
}

Morphism FusionCategory::ev(const Obj& x) const
{
    Obj xd = dual_obj(x);
    Product p(xd, x, N);
    Morphism m = Morphism::zero(p.out(), unit_obj());
    for (int a = 0; a < rank(); ++a)
        for (int i = 0; i < x[a]; ++i)
            m.blocks[unit].set(0, p.pos(unit, dual[a], i, a, i, 0), ev_coeff_[a]);
    return m;
}

void FusionCategory::synthesize_rigidity()
{
    int r = rank();
    ev_coeff_.assign(r, ExactScalar(1));
    coev_coeff_.assign(r, ExactScalar(1));
    for (int a = 0; a < r; ++a) {
        int ad = dual[a];
        if (N(a, ad, unit) != 1 || N(ad, a, unit) != 1)
            throw RigidityError("simple " + simples[a] + " has no dual pair with the unit");
        // coev lands on e = 1 in the source basis of (a, a*, a; a); ev reads f = 1 in its target basis.
        int col = 0, row = 0;
        for (int e = 0; e < unit; ++e)
            col += N(a, ad, e) * N(e, a, a);
        for (int f = 0; f < unit; ++f)
            row += N(ad, a, f) * N(a, f, a);
        const ExactScalar& x = F(a, ad, a, a)(row, col);
        if (x.is_zero())
            throw RigidityError("zig-zag for " + simples[a] + " is unsolvable: associator entry vanishes");
        ev_coeff_[a] = x.inv();
    }
}

Report FusionCategory::check_zigzags() const
{
    Report rep;
    for (int a = 0; a < rank(); ++a) {
        Obj x = simple(a), xd = dual_obj(x), one = unit_obj();
        Morphism z1 = tensor(Morphism::identity(x), ev(x)) * assoc(x, xd, x) * tensor(coev(x), Morphism::identity(x));
        if (!z1.is_identity())
            rep.add("zig-zag (id (*) ev) a (coev (*) id) fails at " + simples[a]);
        Morphism z2 =
            tensor(ev(x), Morphism::identity(xd)) * assoc_inv(xd, x, xd) * tensor(Morphism::identity(xd), coev(x));
        if (!z2.is_identity())
            rep.add("zig-zag (ev (*) id) a^-1 (id (*) coev) fails at " + simples[a]);
    }
    return rep;
}

Report FusionCategory::validate(bool stop_at_first) const
{
    Report rep;
    int r = rank();
    auto lbl = [this](std::initializer_list<int> xs) {
        std::ostringstream s;
        s << "(";
        bool first = true;
        for (int x : xs) {
            s << (first ? "" : ",") << simples[x];
            first = false;
        }
        s << ")";
        return s.str();
    };
    for (int a = 0; a < r; ++a)
        for (int c = 0; c < r; ++c) {
            int d = a == c ? 1 : 0;
            if (N(a, unit, c) != d || N(unit, a, c) != d)
                rep.add("unit: fusion with the unit is not trivial at " + lbl({a, c}));
        }
    for (int a = 0; a < r; ++a) {
        if (dual[dual[a]] != a)
            rep.add("duality: dual is not an involution at " + lbl({a}));
        if (N(a, dual[a], unit) != 1 || N(dual[a], a, unit) != 1)
            rep.add("duality: unit does not occur once in " + lbl({a, dual[a]}));
    }
    if (!rep.ok())
        return rep;
    bool singular = false;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    const ExactMatrix& m = F(a, b, c, d);
                    if (m.rows() == 0)
                        continue;
                    if ((a == unit || b == unit || c == unit) && !m.is_identity())
                        rep.add("unit: associator block " + lbl({a, b, c, d}) + " is not the identity");
                    if (!is_invertible(m)) {
                        rep.add("associator block " + lbl({a, b, c, d}) + " is singular");
                        singular = true;
                    }
                    if (stop_at_first && !rep.ok())
                        return rep;
                }
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    // With identity unit blocks and strict unit fusion, instances with a unit argument hold.
                    if (a == unit || b == unit || c == unit || d == unit)
                        continue;
                    Obj A = simple(a), B = simple(b), C = simple(c), D = simple(d);
                    Obj ab = tensor(A, B), bc = tensor(B, C), cd = tensor(C, D);
                    Morphism lhs = assoc(A, B, cd) * assoc(ab, C, D);
                    Morphism rhs = tensor(Morphism::identity(A), assoc(B, C, D)) * assoc(A, bc, D) *
                                   tensor(assoc(A, B, C), Morphism::identity(D));
                    for (int e = 0; e < r; ++e)
                        if (lhs.blocks[e] != rhs.blocks[e])
                            rep.add("pentagon fails at " + lbl({a, b, c, d, e}));
                    if (stop_at_first && !rep.ok())
                        return rep;
                }
    if (!singular)
        rep.merge(check_zigzags());
    return rep;
}

FusionCategory FusionCategory::reverse() const
{
    int r = rank();
    Mult3 Nr(r, r, r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                Nr.at(a, b, c) = N(b, a, c);
    // The reversed associator at (a, b, c) is the inverse of the original one at (c, b, a).
    std::vector<std::pair<std::array<int, 4>, ExactMatrix>> blocks;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    const ExactMatrix& m = F(c, b, a, d);
                    if (m.rows() == 0 || m.is_identity())
                        continue;
                    blocks.push_back({{a, b, c, d}, inverse(m)});
                }
    return FusionCategory(id + "-rev", simples, unit, dual, Nr, blocks);
}

bool FusionCategory::same_data(const FusionCategory& o) const
{
    return simples == o.simples && unit == o.unit && dual == o.dual && N == o.N && F_ == o.F_;
}

}  // namespace tensoradj
