#pragma once

#include "tensoradj/functor.hpp"

#include "json.hpp"

namespace tensoradj {

class Catalog;

using json = nlohmann::json;

json scalar_to_json(const ExactScalar& s);
ExactScalar scalar_from_json(const json& j);  // also accepts integers and "p/q" strings
json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);
json morphism_to_json(const Morphism& f);

json category_to_json(const FusionCategory& c);
CategoryPtr category_from_json(const json& j);

// Module associators are written as the full block-diagonal matrix of m_{x,y,m} ordered by target n.
json module_to_json(const ModuleCategory& m);
ModulePtr module_from_json(const json& j, const Catalog& cat, const CategoryPtr& base = nullptr);

// Functors are flattened first; "source"/"target" are "category/module" catalog keys and each
// coherence matrix is the block-diagonal c_{x,m} ordered by target label.
json functor_to_json(const ModuleFunctor& f);
ModuleFunctor functor_from_json(const json& j, const Catalog& cat);

json read_json_file(const std::string& path);  // SchemaError on unreadable or malformed input
void write_json_file(const std::string& path, const json& j);

}  // namespace tensoradj
