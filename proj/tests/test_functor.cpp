#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tensoradj/catalog.hpp"
#include "tensoradj/errors.hpp"
#include "tensoradj/functor.hpp"
#include "tensoradj/io.hpp"

using namespace tensoradj;

namespace {

const Catalog& cat() { return default_catalog(); }

std::vector<ModulePtr> all_modules()
{
    std::vector<ModulePtr> r;
    for (const auto& c : cat().category_ids())
        for (const auto& m : cat().module_ids(c))
            r.push_back(cat().module(c, m));
    return r;
}

Obj random_obj(std::mt19937& rng, int n, int max)
{
    std::uniform_int_distribution<int> d(0, max);
    Obj x(n);
    for (auto& k : x)
        k = d(rng);
    return x;
}

void require_ok(const Report& r)
{
    for (const auto& v : r.violations)
        MESSAGE(v);
    CHECK(r.ok());
}

// c_{X,M} from the simple blocks by naturality: sum over summands of (i_x (.) F(i_m)) c_{x,m} F(p_x (.) p_m).
Morphism coherence_by_naturality(const ModuleFunctor& f, const Obj& x, const Obj& m)
{
    const ModuleCategory& s = *f.source;
    const ModuleCategory& t = *f.target;
    const FusionCategory& c = s.C();
    Morphism r = Morphism::zero(f.apply(s.act(x, m)), t.act(x, f.apply(m)));
    for (int a = 0; a < c.rank(); ++a)
        for (int i = 0; i < x[a]; ++i)
            for (int p = 0; p < s.size(); ++p)
                for (int j = 0; j < m[p]; ++j)
                    r = r + t.act(summand_inclusion(x, a, i), f.apply(summand_inclusion(m, p, j))) *
                                f.coherence(c.simple(a), s.msimple(p)) *
                                f.apply(s.act(summand_projection(x, a, i), summand_projection(m, p, j)));
    return r;
}

}  // namespace

TEST_CASE("identity functor and composition with it")
{
    auto m = cat().module("fib", "regular");
    ModulePtr reg = regular_module(m->base);
    ModuleFunctor id = ModuleFunctor::identity(m);
    CHECK(id.is_identity());
    require_ok(id.validate());
    ModuleFunctor r = action_functor(reg, m, m->msimple(1));
    CHECK(compose(id, r).table() == r.table());
    CHECK(compose(r, ModuleFunctor::identity(reg)).factors.size() == r.factors.size());
    auto v = cat().module("vecz2", "vec");
    ModuleFunctor rv = action_functor(regular_module(v->base), v, v->msimple(0));
    CHECK_THROWS_AS(compose(rv, rv), ShapeError);
}

TEST_CASE("R_x o R_y has the table of right multiplication by y (*) x")
{
    for (const char* id : {"fib", "vecs3", "vecz4w"}) {
        auto c = cat().category(id);
        ModulePtr reg = regular_module(c);
        for (int x = 0; x < c->rank(); ++x)
            for (int y = 0; y < c->rank(); ++y) {
                ModuleFunctor f = compose(right_mult(reg, c->simple(x)), right_mult(reg, c->simple(y)));
                for (int z = 0; z < c->rank(); ++z)
                    CHECK(f.apply(c->simple(z)) == c->tensor(c->tensor(c->simple(z), c->simple(y)), c->simple(x)));
            }
    }
}

TEST_CASE("action functors and their composites are module functors")
{
    std::mt19937 rng(3);
    int checked = 0;
    for (const auto& m : all_modules()) {
        CAPTURE(m->C().id + "/" + m->id);
        ModulePtr reg = regular_module(m->base);
        const FusionCategory& c = m->C();
        for (int t = 0; t < 3; ++t) {
            Obj x = random_obj(rng, c.rank(), 1), p = random_obj(rng, m->size(), 1);
            p[t % m->size()] += 1;
            ModuleFunctor f = compose(action_functor(reg, m, p), right_mult(reg, x));
            if (total_dim(x) == 0)
                x[c.unit] = 1;
            require_ok(f.validate());
            ++checked;
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("scattered coherence agrees with the naturality sum")
{
    std::mt19937 rng(11);
    for (const char* id : {"fib", "vecs3", "vecz2w"}) {
        auto m = cat().module(id, "regular");
        const FusionCategory& c = m->C();
        ModulePtr reg = regular_module(m->base);
        ModuleFunctor f = compose(action_functor(reg, m, m->msimple(1)), right_mult(reg, c.simple(c.rank() - 1)));
        ModuleFunctor flat = f.flatten();
        CHECK(flat.factors.size() == 1);
        require_ok(flat.validate());
        for (int t = 0; t < 4; ++t) {
            Obj x = random_obj(rng, c.rank(), 1), mm = random_obj(rng, m->size(), 2);
            CHECK(f.coherence(x, mm) == coherence_by_naturality(f, x, mm));
            CHECK(flat.coherence(x, mm) == coherence_by_naturality(flat, x, mm));
        }
    }
}

TEST_CASE("right adjoint of R_m has the internal Hom multiplicities")
{
    for (const auto& m : all_modules()) {
        CAPTURE(m->C().id + "/" + m->id);
        ModulePtr reg = regular_module(m->base);
        for (int p = 0; p < m->size(); ++p) {
            Adjunction a = right_adjoint(action_functor(reg, m, m->msimple(p)));
            for (int n = 0; n < m->size(); ++n)
                CHECK(a.right.apply(m->msimple(n)) == m->hom(m->msimple(p), m->msimple(n)));
            require_ok(a.check());
        }
    }
}

TEST_CASE("right adjoint of the identity functor is the identity")
{
    auto m = cat().module("vecz2", "vec");
    ModuleFunctor id = ModuleFunctor::from_table(m, m, {{1}}, std::vector<Morphism>(m->C().rank(), Morphism::identity(m->msimple(0))));
    require_ok(id.validate());
    Adjunction a = right_adjoint(id);
    require_ok(a.check());
    for (int x = 0; x < m->C().rank(); ++x)
        CHECK(a.right.coherence(m->C().simple(x), m->msimple(0)).is_identity());
    CHECK(a.unit.comp[0].is_identity());
}

TEST_CASE("adjunction triangles for R_x, R_m and their composites")
{
    for (const auto& m : all_modules()) {
        CAPTURE(m->C().id + "/" + m->id);
        const FusionCategory& c = m->C();
        ModulePtr reg = regular_module(m->base);
        for (int x = 0; x < c.rank(); ++x) {
            require_ok(rigidity_adjunction(reg, c.simple(x)).check());
            ModuleFunctor f = compose(action_functor(reg, m, m->msimple(0)), right_mult(reg, c.simple(x)));
            require_ok(right_adjoint(f).check());
            require_ok(left_adjoint(f).check());
        }
    }
}

TEST_CASE("a functor is naturally isomorphic to itself and to its flattening")
{
    auto m = cat().module("fib", "regular");
    ModulePtr reg = regular_module(m->base);
    ModuleFunctor f = compose(action_functor(reg, m, m->msimple(1)), right_mult(reg, m->C().simple(1)));
    auto iso = find_natural_iso(f, f.flatten());
    REQUIRE(iso.has_value());
    require_ok(iso->check_module());
    // R_tau o R_tau and R_{tau (*) tau} differ by the associator, not on the nose.
    ModuleFunctor g = action_functor(reg, m, m->act(m->C().simple(1), m->msimple(1)));
    auto iso2 = find_natural_iso(f, g);
    REQUIRE(iso2.has_value());
    require_ok(iso2->check_module());
    // No transformation between functors with disjoint supports.
    auto z2 = cat().module("vecz2", "regular");
    ModulePtr r2 = regular_module(z2->base);
    CHECK(!find_natural_iso(action_functor(r2, z2, z2->msimple(0)), action_functor(r2, z2, z2->msimple(1))).has_value());
}

TEST_CASE("module transformations End(R_P) have the dimension of End(P)")
{
    auto m = cat().module("fib", "regular");
    ModulePtr reg = regular_module(m->base);
    Obj p{2, 1};
    CHECK(module_transformations(action_functor(reg, m, p), action_functor(reg, m, p)).size() == 5u);
}

TEST_CASE("point isomorphism of R_m is the identity")
{
    for (const auto& m : all_modules()) {
        ModulePtr reg = regular_module(m->base);
        for (int p = 0; p < m->size(); ++p) {
            ModuleFunctor r = action_functor(reg, m, m->msimple(p));
            ModuleNatTrans a = point_iso(r, reg);
            CHECK(a == ModuleNatTrans::identity(r));
        }
        ModuleFunctor f = compose(action_functor(reg, m, m->msimple(0)), right_mult(reg, m->C().simple(m->C().rank() - 1)));
        ModuleNatTrans a = point_iso(f, reg);
        CHECK(a.is_invertible());
        require_ok(a.check_module());
    }
}

TEST_CASE("dual of a composition is invertible and trivial against the identity")
{
    for (const auto& m : all_modules()) {
        CAPTURE(m->C().id + "/" + m->id);
        ModulePtr reg = regular_module(m->base);
        const FusionCategory& c = m->C();
        ModuleFunctor rm = action_functor(reg, m, m->msimple(0));
        for (int x = 0; x < c.rank(); ++x) {
            ModuleNatTrans d = dual_of_composition_iso(rm, right_mult(reg, c.simple(x)));
            CHECK(d.is_invertible());
            require_ok(d.check_module());
        }
        ModuleNatTrans d = dual_of_composition_iso(rm, ModuleFunctor::identity(reg));
        CHECK(d == ModuleNatTrans::identity(right_adjoint(rm).right));
    }
}

TEST_CASE("dual of R_m o R_x matches frak_b1 for every catalog triple")
{
    for (const auto& m : all_modules()) {
        CAPTURE(m->C().id + "/" + m->id);
        for (int x = 0; x < m->C().rank(); ++x)
            for (int p = 0; p < m->size(); ++p)
                require_ok(verify_duals_lemma(m, x, p));
    }
}

TEST_CASE("direct sum of functors")
{
    auto m = cat().module("vecs3", "cosets-a3");
    ModulePtr reg = regular_module(m->base);
    const FusionCategory& c = m->C();
    Obj x = c.simple(3);
    ModuleFunctor a = action_functor(reg, m, m->msimple(0));
    ModuleFunctor s = direct_sum({a, compose(a, right_mult(reg, x))});
    require_ok(s.validate());
    for (int y = 0; y < c.rank(); ++y) {
        Obj lhs = s.apply(c.simple(y)), a1 = a.apply(c.simple(y)), a2 = a.apply(c.tensor(c.simple(y), x));
        for (int n = 0; n < m->size(); ++n)
            CHECK(lhs[n] == a1[n] + a2[n]);
    }
    // s is isomorphic to R_P with P = m0 + x (.) m0, so its endomorphisms are End(P).
    Obj p = m->act(x, m->msimple(0));
    p[0] += 1;
    size_t dim = 0;
    for (int n = 0; n < m->size(); ++n)
        dim += static_cast<size_t>(p[n] * p[n]);
    CHECK(module_transformations(s, s).size() == dim);
    REQUIRE(find_natural_iso(s, action_functor(reg, m, p)).has_value());
}

TEST_CASE("dual of a composition is inverse to the mate of the composite adjunction")
{
    for (const char* id : {"fib", "vecz2w", "vecs3"}) {
        for (const auto& mid : cat().module_ids(id)) {
            auto m = cat().module(id, mid);
            CAPTURE(m->C().id + "/" + m->id);
            const FusionCategory& c = m->C();
            ModulePtr reg = regular_module(m->base);
            Adjunction f = right_adjoint(action_functor(reg, m, m->msimple(m->size() - 1)));
            Adjunction g = rigidity_adjunction(reg, c.simple(c.rank() - 1));
            Adjunction fg = right_adjoint(compose(f.left, g.left));
            Adjunction both = compose_adjunctions(f, g);
            require_ok(both.check());
            ModuleNatTrans d = dual_of_composition_iso(f, g, fg);
            ModuleNatTrans back = mate(ModuleNatTrans::identity(fg.left), fg, both);
            CHECK((d * back) == ModuleNatTrans::identity(both.right));
            CHECK((back * d) == ModuleNatTrans::identity(fg.right));
        }
    }
}

TEST_CASE("left adjoint of the right adjoint is isomorphic to the functor")
{
    for (const char* id : {"fib", "vecz4w", "vecs3"}) {
        for (const auto& mid : cat().module_ids(id)) {
            auto m = cat().module(id, mid);
            CAPTURE(m->C().id + "/" + m->id);
            ModulePtr reg = regular_module(m->base);
            ModuleFunctor f = compose(action_functor(reg, m, m->msimple(0)), right_mult(reg, m->C().simple(1)));
            ModuleFunctor back = left_adjoint(right_adjoint(f).right).left;
            auto iso = find_natural_iso(back, f);
            REQUIRE(iso.has_value());
            require_ok(iso->check_module());
            ModuleFunctor back2 = right_adjoint(left_adjoint(f).left).right;
            REQUIRE(find_natural_iso(back2, f).has_value());
        }
    }
}

TEST_CASE("point equivalence: H(R_m) = m")
{
    for (const auto& m : all_modules()) {
        ModulePtr reg = regular_module(m->base);
        for (int p = 0; p < m->size(); ++p)
            CHECK(action_functor(reg, m, m->msimple(p)).apply(m->C().unit_obj()) == m->msimple(p));
    }
}

TEST_CASE("functor JSON round trip")
{
    auto m = cat().module("fib", "regular");
    ModulePtr reg = cat().module("fib", "regular");
    ModuleFunctor f = compose(action_functor(reg, m, m->msimple(1)), right_mult(reg, m->C().simple(1)));
    json j = functor_to_json(f);
    ModuleFunctor back = functor_from_json(json::parse(j.dump()), cat());
    require_ok(back.validate());
    CHECK(back.table() == f.table());
    CHECK(functor_to_json(back) == j);
    const FusionCategory& c = m->C();
    for (int x = 0; x < c.rank(); ++x)
        for (int p = 0; p < m->size(); ++p)
            CHECK(back.coherence(c.simple(x), m->msimple(p)) == f.flatten().coherence(c.simple(x), m->msimple(p)));

    json bad = j;
    bad["coherence"][0]["matrix"] = json::array({{1}});
    CHECK_THROWS_AS(functor_from_json(bad, cat()), SchemaError);
    bad = j;
    bad["table"] = json::array({{0, 0, 2}});
    CHECK_THROWS_AS(functor_from_json(bad, cat()), SchemaError);
    // Flipping a coherence sign keeps the shape but breaks the functor axioms.
    bad = j;
    auto& mat = bad["coherence"][0]["matrix"];
    REQUIRE(!mat.empty());
    ModuleFunctor flipped = [&] {
        ExactMatrix e = matrix_from_json(mat);
        e = e.scaled(ExactScalar(-1));
        mat = matrix_to_json(e);
        return functor_from_json(bad, cat());
    }();
    CHECK(!flipped.validate().ok());
}
