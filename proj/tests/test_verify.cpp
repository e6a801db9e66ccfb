#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tensoradj/errors.hpp"
#include "tensoradj/verify.hpp"

using namespace tensoradj;

namespace {

void require_rows(const SuiteReport& s)
{
    CAPTURE(s.suite);
    CHECK(!s.rows.empty());
    for (const auto& r : s.rows)
        if (!r.pass)
            MESSAGE(std::string(r.entry + " " + r.check + ": " + r.detail));
    CHECK(s.ok());
}

}  // namespace

TEST_CASE("permuted and gauge modules are valid and differ from the original")
{
    auto m = default_catalog().module("vecs3", "cosets-a3");
    ModulePtr p = permuted_module(m, {1, 0}, "swapped");
    CHECK(p->validate().ok());
    CHECK(p->msimples[0] == m->msimples[1]);
    CHECK_THROWS_AS(permuted_module(m, {0, 0}, "bad"), ShapeError);
    auto u = [](int x, int q) { return x == 0 ? ExactScalar(1) : ExactScalar(x + 1) + ExactScalar(q); };
    ModulePtr g = gauge_module(m, u, "gauged");
    CHECK(g->validate().ok());
    CHECK(!g->same_data(*m));
    EquivalenceData d = simple_equivalence(m, g, {0, 1}, u);
    CHECK(d.X.validate().ok());
    CHECK(d.Y.validate().ok());
    EquivalenceIso iso = equivalent_modules_iso(m, g, d);
    for (const auto& v : iso.report.violations)
        MESSAGE(v);
    CHECK(iso.report.ok());
    EquivalenceData swap = simple_equivalence(m, p, {1, 0}, [](int, int) { return ExactScalar(1); });
    CHECK(equivalent_modules_iso(m, p, swap).report.ok());
    CHECK_THROWS_AS(gauge_module(default_catalog().module("fib", "regular"), u, "x"), ShapeError);
    CHECK_THROWS_AS(gauge_module(m, [](int, int) { return ExactScalar(2); }, "x"), ShapeError);
}

TEST_CASE("every suite passes and every negative control is caught")
{
    for (const auto& name : suite_names()) {
        auto plain = run_suite(name, default_catalog(), 5489u, false);
        REQUIRE(plain.size() == 1u);
        require_rows(plain.front());
        auto perturbed = run_suite(name, default_catalog(), 5489u, true);
        REQUIRE(perturbed.size() == 1u);
        CHECK(perturbed.front().perturbed);
        require_rows(perturbed.front());
    }
}

TEST_CASE("suite output is deterministic and sorted")
{
    auto a = suite_to_json(run_suite("comparison", default_catalog(), 1u, false).front());
    auto b = suite_to_json(run_suite("comparison", default_catalog(), 1u, false).front());
    CHECK(a.dump() == b.dump());
    std::vector<std::string> entries;
    for (const auto& r : a["rows"])
        entries.push_back(r["entry"].get<std::string>());
    CHECK(std::is_sorted(entries.begin(), entries.end()));
    CHECK_THROWS_AS(run_suite("nonsense", default_catalog(), 1u, false), SchemaError);
}
