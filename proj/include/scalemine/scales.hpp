#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "scalemine/inventory.hpp"

namespace scalemine {

// Ranked partition of one category's adjectives into ascending intensity
// tiers. A tier with two or more lemmas is an unresolved slash group.
struct CategoryScale {
    int category = 0;
    std::vector<std::vector<std::string>> tiers; // ascending score, tier members by mpq_value
    std::map<std::string, int> scores;
    std::vector<std::string> uncovered; // category lemmas absent from all relations
};

// Additive scoring: a lemma's score is the number of relations in which it is
// the strong member. Relations must be same-category, self-free, and
// antisymmetric; a (a,b)+(b,a) contradiction aborts naming the pair.
CategoryScale score_category(int category,
                             const std::vector<std::pair<std::string, std::string>>& relations,
                             const AdjectiveInventory& inventory);

struct ScaleSet {
    std::vector<CategoryScale> scales;     // ascending category
    std::vector<int> uncovered_categories; // categories with zero relations
};

ScaleSet build_all_scales(const std::vector<std::tuple<int, std::string, std::string>>& unique_pairs,
                          const AdjectiveInventory& inventory);

// "9: <dull/sore/aching, heavy, hurting>"
std::string render_scale(const CategoryScale& scale, const AdjectiveInventory& inventory);
std::string render_scales_report(const ScaleSet& set, const AdjectiveInventory& inventory);

} // namespace scalemine
