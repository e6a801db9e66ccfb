#pragma once

#include "tensoradj/module.hpp"

#include <functional>
#include <map>

namespace tensoradj {

struct GroupTable {
    std::vector<std::string> names;
    std::vector<std::vector<int>> mul;  // mul[g][h] = gh
    int identity = 0;

    int order() const { return static_cast<int>(names.size()); }
    int inverse(int g) const;
};

GroupTable cyclic_group(int n);
GroupTable product_group(const GroupTable& g, const GroupTable& h);
GroupTable symmetric_group_3();

using Cochain3 = std::function<ExactScalar(int, int, int)>;

// Throws CocycleError unless omega is a normalized 3-cocycle.
void check_cocycle(const GroupTable& g, const Cochain3& omega);

// Vec_G^omega: simples G, a (*) b = ab, associator block (a, b, c; abc) = omega(a, b, c).
CategoryPtr build_pointed(const std::string& id, const GroupTable& g, const Cochain3& omega);
CategoryPtr build_fibonacci();

ModulePtr build_module_regular(const CategoryPtr& c);
// Vec_{G/H} over Vec_G with trivial associator: msimples are the left cosets of H.
ModulePtr build_module_subgroup(const CategoryPtr& c, const GroupTable& g, const std::vector<int>& h,
                                const std::string& id);

struct CatalogEntry {
    std::string id;
    std::string kind;  // "category" or "module"
    std::string provenance;
};

class Catalog {
public:
    // Built-in entries; files in `dir` (when nonempty) are loaded on top and may replace them.
    explicit Catalog(const std::string& dir = "");

    std::vector<CatalogEntry> entries() const;
    std::vector<std::string> category_ids() const;
    std::vector<std::string> module_ids(const std::string& category) const;  // "regular", ...

    bool has_category(const std::string& id) const { return cats_.count(id) > 0; }
    CategoryPtr category(const std::string& id) const;
    ModulePtr module(const std::string& category, const std::string& module) const;

    void add(const CategoryPtr& c, const std::string& provenance);
    void add(const ModulePtr& m, const std::string& local_id, const std::string& provenance);

private:
    std::map<std::string, std::pair<CategoryPtr, std::string>> cats_;
    std::map<std::string, std::pair<ModulePtr, std::string>> mods_;  // key "category/module"
};

// Built-in catalog, honouring the TENSORADJ_CATALOG directory when set.
const Catalog& default_catalog();

}  // namespace tensoradj
