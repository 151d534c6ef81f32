#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgl/group.hpp"

namespace cgl {

/// Catalog entry: named constructor plus the verification data
/// (expected order, defining relations, expected commuting-graph shape
/// where one is stated, and the genus class of that graph).
struct CatalogEntry {
    std::string name;
    std::vector<std::string> aliases;
    long expected_order = 0;
    std::string genus_class;                 // planar|toroidal|double-toroidal|triple-toroidal
    std::string expected_shape;              // shape expression, empty when not stated
    std::vector<std::string> relations;      // words over named generators, each = identity
    std::string generator_names;             // one char per generator, in recipe order
    std::function<GeneratedGroup(long cap)> recipe;
};

const std::vector<CatalogEntry>& catalog();

/// Canonical name for a catalog name or alias; throws UnknownGroupName.
const CatalogEntry& catalog_entry(const std::string& name);
bool is_catalog_name(const std::string& name);

/// Build (and memoize) a catalog group. Honors CGL_CACHE_DIR for on-disk
/// memoization of multiplication tables.
std::shared_ptr<const FiniteGroup> build_group(const std::string& name, long cap = 10000);

/// Generator element indices for the entry's named generators.
std::map<char, int> generator_elements(const std::string& name, long cap = 10000);

/// True iff every relation word of the entry evaluates to the identity.
bool verify_relations(const std::string& name, long cap = 10000);

/// Evaluate a relation word like "x^-1 y x y" or "[x^-1yx, y]" over named
/// group elements; returns the resulting element index.
int evaluate_word(const FiniteGroup& g, const std::string& word, const std::map<char, int>& gens);

}  // namespace cgl
