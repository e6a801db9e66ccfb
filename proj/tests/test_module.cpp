#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tensoradj/catalog.hpp"
#include "tensoradj/errors.hpp"
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

}  // namespace

TEST_CASE("every catalog module validates")
{
    for (const auto& m : all_modules()) {
        CAPTURE(m->C().id + "/" + m->id);
        Report r = m->validate();
        CHECK(r.ok());
        for (const auto& v : r.violations)
            MESSAGE(v);
        CHECK(m->indecomposable());
    }
}

TEST_CASE("perturbed module associator is reported")
{
    ModuleCategory m = *cat().module("fib", "regular");
    ExactMatrix b = m.Mblock(1, 1, 1, 1);
    b.set(1, 1, b(1, 1) * ExactScalar(2));
    m.set_Mblock(1, 1, 1, 1, b);
    CHECK(!m.validate().ok());

    // Negating m(g,g) alone gives another valid module; a unit-indexed block must break the axioms.
    ModuleCategory u = *cat().module("vecz2", "vec");
    u.set_Mblock(1, 0, 0, 0, ExactMatrix::scalar(ExactScalar(-1)));
    CHECK(!u.validate().ok());
}

TEST_CASE("Vec over Vec_Z2 and decomposability")
{
    auto v = cat().module("vecz2", "vec");
    CHECK(v->size() == 1);
    CHECK(v->validate().ok());
    Mult3 A(2, 2, 2);
    A.at(0, 0, 0) = A.at(0, 1, 1) = A.at(1, 0, 0) = A.at(1, 1, 1) = 1;
    ModuleCategory two("vec+vec", cat().category("vecz2"), {"M1", "M2"}, A, {});
    CHECK(two.validate().ok());
    CHECK(!two.indecomposable());
}

TEST_CASE("internal Hom of the regular module over Vec_G is h g^-1")
{
    GroupTable g = symmetric_group_3();
    auto m = cat().module("vecs3", "regular");
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            CHECK(m->hom(m->msimple(x), m->msimple(y)) == m->C().simple(g.mul[y][g.inverse(x)]));
}

TEST_CASE("internal Hom of Vec over Vec_Z2 is the sum of all group elements")
{
    auto v = cat().module("vecz2", "vec");
    CHECK(v->hom(v->msimple(0), v->msimple(0)) == Obj{1, 1});
}

TEST_CASE("Hom(m, m) contains the unit; representing property on composites")
{
    std::mt19937 rng(1);
    for (const auto& m : all_modules()) {
        const FusionCategory& c = m->C();
        for (int p = 0; p < m->size(); ++p)
            CHECK(m->hom(m->msimple(p), m->msimple(p))[c.unit] >= 1);
        for (int t = 0; t < 4; ++t) {
            Obj x = random_obj(rng, c.rank(), 1), mm = random_obj(rng, m->size(), 1), n = random_obj(rng, m->size(), 2);
            // dim Hom_C(X, Hom(M, N)) = dim Hom_M(X (.) M, N)
            Obj h = m->hom(mm, n), xm = m->act(x, mm);
            int lhs = 0, rhs = 0;
            for (int a = 0; a < c.rank(); ++a)
                lhs += x[a] * h[a];
            for (int q = 0; q < m->size(); ++q)
                rhs += xm[q] * n[q];
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("phi and psi are mutually inverse and natural")
{
    std::mt19937 rng(42);
    for (const auto& m : all_modules()) {
        const FusionCategory& c = m->C();
        CAPTURE(c.id + "/" + m->id);
        for (int t = 0; t < 50; ++t) {
            Obj x = random_obj(rng, c.rank(), 1), mm = random_obj(rng, m->size(), 1), n = random_obj(rng, m->size(), 1);
            x[c.unit] += t % 2;
            mm[0] += 1;
            Morphism beta = random_morphism(rng, x, m->hom(mm, n));
            Morphism alpha = m->phi(x, mm, n, beta);
            CHECK(m->psi(x, mm, n, alpha) == beta);
            CHECK(m->phi(x, mm, n, m->psi(x, mm, n, alpha)) == alpha);
            // f phi(beta) = phi(Hom(M, f) beta)
            Obj n2 = random_obj(rng, m->size(), 1);
            Morphism f = random_morphism(rng, n, n2);
            CHECK(f * alpha == m->phi(x, mm, n2, m->hom_map(Morphism::identity(mm), f) * beta));
            // phi(beta) (h (.) id) = phi(beta h)
            Obj x0 = random_obj(rng, c.rank(), 1);
            Morphism h = random_morphism(rng, x0, x);
            CHECK(alpha * m->act(h, Morphism::identity(mm)) == m->phi(x0, mm, n, beta * h));
            // psi(alpha (gamma (.) id)) = psi(alpha) gamma
            CHECK(m->psi(x0, mm, n, alpha * m->act(h, Morphism::identity(mm))) == m->psi(x, mm, n, alpha) * h);
            // contravariant naturality in M: phi(Hom(k, N) beta) = phi(beta) (id (.) k)
            Obj m0 = random_obj(rng, m->size(), 1);
            Morphism k = random_morphism(rng, m0, mm);
            CHECK(m->phi(x, m0, n, m->hom_map(k, Morphism::identity(n)) * beta) ==
                  alpha * m->act(Morphism::identity(x), k));
        }
    }
}

TEST_CASE("phi at the unit of the regular Z/2 module is a nonzero scalar")
{
    auto m = cat().module("vecz2", "regular");
    Obj one = m->C().unit_obj();
    Obj e = m->msimple(0);
    Morphism beta = Morphism::identity(one);  // Hom(e, e) = 1
    REQUIRE(m->hom(e, e) == one);
    Morphism a = m->phi(one, e, e, beta);
    CHECK(total_dim(a.src) == 1);
    CHECK(!a.blocks[0](0, 0).is_zero());
}

TEST_CASE("comp makes Hom(m, m) an associative unital algebra")
{
    for (const auto& m : all_modules()) {
        const FusionCategory& c = m->C();
        CAPTURE(c.id + "/" + m->id);
        for (int p = 0; p < m->size(); ++p) {
            Obj mm = m->msimple(p), h = m->hom(mm, mm);
            Morphism mu = m->comp(mm);
            Morphism id = Morphism::identity(h);
            Morphism lhs = mu * c.tensor(mu, id);
            Morphism rhs = mu * c.tensor(id, mu) * c.assoc(h, h, h);
            CHECK(lhs == rhs);
            Morphism u = m->coev(c.unit_obj(), mm);
            REQUIRE(u.tgt == h);
            CHECK((mu * c.tensor(u, id)).is_identity());
            CHECK((mu * c.tensor(id, u)).is_identity());
        }
    }
}

TEST_CASE("comp on the trivial module is the identity")
{
    Mult3 N(1, 1, 1);
    N.at(0, 0, 0) = 1;
    auto vec = std::make_shared<FusionCategory>("vec", std::vector<std::string>{"1"}, 0, std::vector<int>{0}, N,
                                                std::vector<std::pair<std::array<int, 4>, ExactMatrix>>{});
    auto m = build_module_regular(vec);
    CHECK(m->comp(m->msimple(0)).is_identity());
}

TEST_CASE("group algebra object: regular Z/2 comp is associative")
{
    auto m = cat().module("vecz2", "regular");
    Obj e = m->msimple(0), h = m->hom(e, e);
    CHECK(h == Obj{1, 0});
    auto v = cat().module("vecz2", "vec");
    Obj p = v->msimple(0), hv = v->hom(p, p);
    CHECK(hv == Obj{1, 1});
    Morphism mu = v->comp(p);
    // g . g = e in the group algebra: the (e)-block sends the (g,g) summand to a nonzero multiple.
    CHECK(mu.blocks[0].cols() == 2);
    CHECK(!mu.blocks[0](0, 1).is_zero());
}

TEST_CASE("frak_a is invertible and makes Hom(m, -) a module functor")
{
    std::mt19937 rng(9);
    for (const auto& m : all_modules()) {
        const FusionCategory& c = m->C();
        CAPTURE(c.id + "/" + m->id);
        for (int p = 0; p < m->size(); ++p) {
            Obj mm = m->msimple(p);
            for (int q = 0; q < m->size(); ++q) {
                Obj n = m->msimple(q);
                CHECK(m->frak_a(c.unit_obj(), mm, n).is_identity());
                for (int x = 0; x < c.rank(); ++x) {
                    Obj X = c.simple(x);
                    CHECK(m->frak_a(X, mm, n).is_invertible());
                    for (int y = 0; y < c.rank(); ++y) {
                        Obj Y = c.simple(y);
                        Obj h = m->hom(mm, n);
                        Morphism lhs = c.tensor(Morphism::identity(X), m->frak_a(Y, mm, n)) *
                                       m->frak_a(X, mm, m->act(Y, n)) *
                                       m->hom_map(Morphism::identity(mm), m->massoc(X, Y, n));
                        Morphism rhs = c.assoc(X, Y, h) * m->frak_a(c.tensor(X, Y), mm, n);
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("regular Vec_G: frak_a is a permutation matrix")
{
    auto m = cat().module("vecz3", "regular");
    const FusionCategory& c = m->C();
    for (int x = 0; x < 3; ++x)
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) {
                Morphism a = m->frak_a(c.simple(x), m->msimple(p), m->msimple(q));
                for (const auto& b : a.blocks)
                    for (int i = 0; i < b.rows(); ++i)
                        for (int j = 0; j < b.cols(); ++j)
                            CHECK((b(i, j).is_zero() || b(i, j).is_one()));
            }
}

TEST_CASE("frak_b1 is invertible and frak_b agrees with the Yoneda composite")
{
    for (const auto& m : all_modules()) {
        const FusionCategory& c = m->C();
        CAPTURE(c.id + "/" + m->id);
        for (int p = 0; p < m->size(); ++p)
            for (int q = 0; q < m->size(); ++q) {
                Obj mm = m->msimple(p), n = m->msimple(q);
                CHECK(m->frak_b1(c.unit_obj(), mm, n).is_identity());
                for (int x = 0; x < c.rank(); ++x) {
                    Obj X = c.simple(x);
                    Morphism b1 = m->frak_b1(X, mm, n);
                    CHECK(b1.is_invertible());
                    Obj xm = m->act(X, mm), z = m->hom(xm, n);
                    Morphism direct = m->psi(c.tensor(z, X), mm, n, m->ev(xm, n) * m->massoc(z, X, mm));
                    CHECK(m->frak_b(X, mm, n) == direct);
                }
            }
    }
}

TEST_CASE("module JSON round trip")
{
    for (const auto& m : all_modules()) {
        json j = module_to_json(*m);
        auto back = module_from_json(json::parse(j.dump()), cat());
        CHECK(back->same_data(*m));
    }
    // Per-target block form with the optional "n" key.
    auto fib = cat().module("fib", "regular");
    json j = module_to_json(*fib);
    j["Mblocks"] = json::array({{{"xym", {1, 1, 1}}, {"n", 1}, {"matrix", matrix_to_json(fib->Mblock(1, 1, 1, 1))}}});
    CHECK(module_from_json(j, cat())->same_data(*fib));
}
