#pragma once

#include "tensoradj/adjoint.hpp"
#include "tensoradj/catalog.hpp"
#include "tensoradj/io.hpp"

#include <cstdint>

namespace tensoradj {

// Module with the simples reordered: simple q of the result is simple perm[q] of m.
ModulePtr permuted_module(const ModulePtr& m, const std::vector<int>& perm, const std::string& id);
// Gauge transform of a module whose action sends simples to simples over a pointed category:
// block (x, y, p) is multiplied by u(y, p) u(x, y p) / u(x y, p), with u(1, -) = 1. ShapeError otherwise.
ModulePtr gauge_module(const ModulePtr& m, const std::function<ExactScalar(int, int)>& u, const std::string& id);
// X: m -> m2 sending simple p to image[p] with coherence scale(x, p), Y its inverse table with
// reciprocal coherence, and identity components for alpha and beta.
EquivalenceData simple_equivalence(const ModulePtr& m, const ModulePtr& m2, const std::vector<int>& image,
                                   const std::function<ExactScalar(int, int)>& scale);

// One line of a verification run. In perturbed runs `pass` means the negative control was caught.
struct CheckRow {
    std::string entry, check;
    bool pass = false;
    std::string detail;
};
struct SuiteReport {
    std::string suite;
    bool perturbed = false;
    std::vector<CheckRow> rows;
    bool ok() const;
};

const std::vector<std::string>& suite_names();  // excludes "all"
// Throws SchemaError on an unknown suite name. Rows come out sorted by entry id within each suite.
std::vector<SuiteReport> run_suite(const std::string& name, const Catalog& cat, std::uint32_t seed, bool perturb);
json suite_to_json(const SuiteReport& s);

}  // namespace tensoradj
