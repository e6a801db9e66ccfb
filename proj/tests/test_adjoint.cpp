#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tensoradj/adjoint.hpp"
#include "tensoradj/catalog.hpp"
#include "tensoradj/errors.hpp"
#include "tensoradj/verify.hpp"

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

void require_ok(const Report& r)
{
    for (const auto& v : r.violations)
        MESSAGE(v);
    CHECK(r.ok());
}

// 2-cochain u(0, -) = 1, u(1, 0) = 2, u(1, 1) = -3 for gauge-transforming the Vec_Z2 regular module;
// the identity-table functor with coherence u is then an equivalence onto the copy.
ExactScalar gauge_u(int x, int m)
{
    if (x == 0)
        return ExactScalar(1);
    return m == 0 ? ExactScalar(2) : ExactScalar(-3);
}

ModulePtr gauge_copy(const ModulePtr& m) { return gauge_module(m, gauge_u, "gauge"); }
ModulePtr relabeled(const ModulePtr& m) { return permuted_module(m, {1, 0}, "relabeled"); }

ExactScalar random_nonzero(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), im(-2, 2);
    for (;;) {
        ExactScalar s = ExactScalar(num(rng)) / ExactScalar(den(rng)) + ExactScalar(im(rng)) * ExactScalar::zeta(4);
        if (!s.is_zero())
            return s;
    }
}

}  // namespace

TEST_CASE("carrier of A_C is the sum of a a* over the simples")
{
    for (const auto& id : cat().category_ids()) {
        CAPTURE(id);
        auto c = cat().category(id);
        Obj expected(c->rank(), 0);
        for (int a = 0; a < c->rank(); ++a)
            for (int k = 0; k < c->rank(); ++k)
                expected[k] += c->N(a, c->dual[a], k);
        CHECK(shimizu_adjoint(cat().module(id, "regular")).algebra.carrier.object == expected);
    }
    CHECK(shimizu_adjoint(cat().module("fib", "regular")).algebra.carrier.object == Obj{2, 1});
}

TEST_CASE("Shimizu adjoint: small examples")
{
    // Vec_Z2 over itself: two orthogonal idempotents summing to the unit.
    ShimizuAdjoint s = shimizu_adjoint(cat().module("vecz2", "regular"));
    const CenterAlgebra& a = s.algebra;
    REQUIRE(a.carrier.object == Obj{2, 0});
    const ExactMatrix& mu = a.mult.blocks[0];
    REQUIRE(mu.rows() == 2);
    REQUIRE(mu.cols() == 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(mu(k, i * 2 + j) == ExactScalar(i == j && j == k ? 1 : 0));
    CHECK(a.unit.blocks[0](0, 0) == ExactScalar(1));
    CHECK(a.unit.blocks[0](1, 0) == ExactScalar(1));

    // Vec over Vec_Z2: A_M = Hom(pt, pt) = 1 + g, with the unit in the unit summand.
    ShimizuAdjoint v = shimizu_adjoint(cat().module("vecz2", "vec"));
    CHECK(v.algebra.carrier.object == Obj{1, 1});
    CHECK(v.algebra.unit.blocks[0](0, 0) != ExactScalar(0));
    require_ok(validate_center_algebra(v.algebra));
}

TEST_CASE("a decomposable module is rejected")
{
    auto c = cat().category("vecz2");
    Mult3 a(2, 2, 2);
    for (int x = 0; x < 2; ++x)
        for (int p = 0; p < 2; ++p)
            a.at(x, p, p) = 1;
    auto twice = std::make_shared<ModuleCategory>("vec+vec", c, std::vector<std::string>{"p", "q"}, a,
                                                  std::vector<std::pair<std::array<int, 4>, ExactMatrix>>{});
    require_ok(twice->validate());
    CHECK(!twice->indecomposable());
    CHECK_THROWS_AS(shimizu_adjoint(twice), IndecomposabilityError);
    CHECK_THROWS_AS(twocat_adjoint(twice), IndecomposabilityError);
}

TEST_CASE("two-categorical adjoint: center algebra with module half-braidings")
{
    for (const auto& m : all_modules()) {
        CAPTURE(m->C().id + "/" + m->id);
        TwoCatAdjoint t = twocat_adjoint(m);
        require_ok(validate_center_algebra(t.phi_image));
        for (const auto& s : t.sigma2) {
            CHECK(s.is_invertible());
            require_ok(s.check_module());
        }
        // L(1) has the carrier of A_M.
        CHECK(t.phi_image.carrier.object == shimizu_adjoint(m).algebra.carrier.object);
    }
}

TEST_CASE("comparison of the two adjoint algebras on every catalog pair")
{
    for (const auto& m : all_modules()) {
        CAPTURE(m->C().id + "/" + m->id);
        ComparisonIso r = compare_adjoints(shimizu_adjoint(m), twocat_adjoint(m));
        require_ok(r.invertible);
        require_ok(r.center);
        require_ok(r.algebra);
        CHECK_NOTHROW(compare_adjoints(m));
    }
}

TEST_CASE("comparison negative control: a sign flip in the half-braiding is caught")
{
    for (const char* id : {"vecz2", "vecz3", "vecs3", "fib"}) {
        CAPTURE(id);
        auto m = cat().module(id, "regular");
        ShimizuAdjoint s = shimizu_adjoint(m);
        TwoCatAdjoint t = twocat_adjoint(m);
        ModuleNatTrans& last = t.sigma2.back();
        last = last.scaled(ExactScalar(-1));
        materialize(t);
        ComparisonIso r = compare_adjoints(s, t);
        CHECK(r.invertible.ok());
        CHECK(!r.center.ok());
    }
}

TEST_CASE("comparison negative control: a rescaled unit breaks the algebra certificate")
{
    auto m = cat().module("fib", "regular");
    ShimizuAdjoint s = shimizu_adjoint(m);
    TwoCatAdjoint t = twocat_adjoint(m);
    t.unit2 = t.unit2.scaled(ExactScalar(2));
    materialize(t);
    CHECK(!compare_adjoints(s, t).algebra.ok());
}

TEST_CASE("rescaling the dinaturals: explicit and random factors")
{
    auto z2 = cat().module("vecz2", "regular");
    require_ok(dinatural_invariance(z2, {ExactScalar(1), ExactScalar(-1)}));
    CHECK_THROWS_AS(dinatural_invariance(z2, {ExactScalar(1), ExactScalar(0)}), InvalidRescale);
    CHECK_THROWS_AS(dinatural_invariance(z2, {ExactScalar(1)}), InvalidRescale);

    std::mt19937 rng(52);
    for (const auto& m : all_modules()) {
        CAPTURE(m->C().id + "/" + m->id);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<ExactScalar> scale;
            for (int p = 0; p < m->size(); ++p)
                scale.push_back(random_nonzero(rng));
            require_ok(dinatural_invariance(m, scale));
        }
    }
}

TEST_CASE("rescaled dinaturals give a different but isomorphic half-braiding")
{
    auto m = cat().module("vecz3", "regular");
    TwoCatAdjoint t = twocat_adjoint(m), t2 = twocat_adjoint(m, {ExactScalar(1), ExactScalar(2), ExactScalar(5)});
    CHECK(!(t.phi_image.carrier.sigma == t2.phi_image.carrier.sigma));
}

TEST_CASE("equivalent modules: identity equivalence gives the identity")
{
    auto m = cat().module("vecz2", "regular");
    auto id = ModuleFunctor::identity(m);
    EquivalenceData d{id, id, ModuleNatTrans::identity(id), ModuleNatTrans::identity(id)};
    EquivalenceIso r = equivalent_modules_iso(m, m, d);
    require_ok(r.report);
    TwoCatAdjoint t = twocat_adjoint(m);
    CHECK(r.f == ModuleNatTrans::identity(t.L));
}

TEST_CASE("equivalent modules: relabeled simples")
{
    auto m = cat().module("vecz2", "regular");
    auto m2 = relabeled(m);
    require_ok(m2->validate());
    EquivalenceData d = simple_equivalence(m, m2, {1, 0}, [](int, int) { return ExactScalar(1); });
    require_ok(d.X.validate());
    EquivalenceIso r = equivalent_modules_iso(m, m2, d);
    require_ok(r.report);
}

TEST_CASE("equivalent modules: gauge-transformed copy")
{
    auto m = cat().module("vecz2", "regular");
    auto m2 = gauge_copy(m);
    require_ok(m2->validate());
    CHECK(!m2->same_data(*m));
    EquivalenceData d = simple_equivalence(m, m2, {0, 1}, gauge_u);
    require_ok(d.X.validate());
    require_ok(d.Y.validate());
    EquivalenceIso r = equivalent_modules_iso(m, m2, d);
    require_ok(r.report);
    // The transported algebra is still an algebra in the center.
    require_ok(validate_center_algebra(twocat_adjoint(m2).phi_image));
}

TEST_CASE("equivalent modules: invalid data is rejected")
{
    auto m = cat().module("vecz2", "regular");
    auto m2 = gauge_copy(m);
    EquivalenceData d = simple_equivalence(m, m2, {0, 1}, gauge_u);

    EquivalenceData zero = d;
    zero.alpha = zero.alpha.scaled(ExactScalar(0));
    CHECK_THROWS_AS(equivalent_modules_iso(m, m2, zero), EquivalenceError);

    // The identity table without the gauge coherence is not a module functor into the copy.
    EquivalenceData plain = simple_equivalence(m, m2, {0, 1}, [](int, int) { return ExactScalar(1); });
    CHECK_THROWS_AS(equivalent_modules_iso(m, m2, plain), EquivalenceError);

    CHECK_THROWS_AS(equivalent_modules_iso(m2, m, d), EquivalenceError);
}

TEST_CASE("class functions: dimension equals the rank of the category")
{
    // A_C is induced from the unit, so End(A_C) = Hom_C(sum_a a a*, 1), one dimension per simple.
    for (const auto& id : cat().category_ids()) {
        CAPTURE(id);
        auto c = cat().category(id);
        int oracle = 0;
        for (int a = 0; a < c->rank(); ++a)
            oracle += c->N(a, c->dual[a], c->unit);
        auto basis = class_functions(cat().module(id, "regular"));
        CHECK(static_cast<int>(basis.size()) == oracle);
        ShimizuAdjoint s = shimizu_adjoint(cat().module(id, "regular"));
        for (const auto& f : basis)
            CHECK(is_center_morphism(f, s.algebra.carrier, s.algebra.carrier));
    }
    CHECK(class_functions(cat().module("vecz2", "regular")).size() == 2u);
    CHECK(class_functions(cat().module("vecz2w", "regular")).size() == 2u);
    CHECK(class_functions(cat().module("fib", "regular")).size() == 2u);
}

TEST_CASE("class functions of a non-regular module")
{
    // Vec over Vec_Z2: A_M = 1 + g, A_C = 1 + 1; Hom_C(A_M, A_C) is two-dimensional, cut to the
    // half-braiding-compatible maps.
    auto v = cat().module("vecz2", "vec");
    auto basis = class_functions(v);
    CHECK(basis.size() <= 2u);
    CHECK(basis.size() >= 1u);
    ShimizuAdjoint am = shimizu_adjoint(v), ac = shimizu_adjoint(cat().module("vecz2", "regular"));
    for (const auto& f : basis)
        CHECK(is_center_morphism(f, am.algebra.carrier, ac.algebra.carrier));
}

TEST_CASE("transports of the end: X (*) A_M and the regular-module side")
{
    std::mt19937 rng(11);
    for (const char* id : {"vecz2", "fib"}) {
        CAPTURE(id);
        auto m = cat().module(id, "regular");
        ShimizuAdjoint s = shimizu_adjoint(m);
        for (int x = 0; x < m->C().rank(); ++x)
            require_ok(verify_end_universal(tensor_end(s, m->C().simple(x)), 20, rng));
        require_ok(verify_twocat_end(twocat_adjoint(m), 20, rng));
    }
}

TEST_CASE("two-categorical end on non-regular modules")
{
    std::mt19937 rng(3);
    for (const auto& m : all_modules()) {
        if (m->id == "regular")
            continue;
        CAPTURE(m->C().id + "/" + m->id);
        require_ok(verify_twocat_end(twocat_adjoint(m), 5, rng));
    }
}
