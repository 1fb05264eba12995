#include "scalemine/scales.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "scalemine/errors.hpp"

namespace scalemine {

CategoryScale score_category(int category,
                             const std::vector<std::pair<std::string, std::string>>& relations,
                             const AdjectiveInventory& inventory) {
    std::set<std::pair<std::string, std::string>> unique(relations.begin(), relations.end());

    for (const auto& [weak, strong] : unique) {
        if (weak == strong)
            throw DataError("category " + std::to_string(category) +
                            ": self relation (" + weak + ", " + strong + ") cannot be scored");
        if (unique.count({strong, weak}))
            throw DataError("category " + std::to_string(category) + ": contradictory relations (" +
                            weak + ", " + strong + ") and (" + strong + ", " + weak + ")");
        for (const std::string& lemma : {weak, strong}) {
            const InventoryEntry* e = inventory.find(lemma);
            if (!e)
                throw DataError("category " + std::to_string(category) + ": lemma '" + lemma +
                                "' is not in the inventory");
            if (e->category != category)
                throw DataError("category " + std::to_string(category) + ": lemma '" + lemma +
                                "' belongs to category " + std::to_string(e->category));
        }
    }

    CategoryScale scale;
    scale.category = category;
    for (const auto& [weak, strong] : unique) {
        scale.scores.try_emplace(weak, 0); // weak membership contributes nothing
        ++scale.scores[strong];
    }

    // Tiers: ascending score, members ordered by mpq_value.
    std::map<int, std::vector<std::string>> by_score;
    for (const auto& [lemma, score] : scale.scores) by_score[score].push_back(lemma);
    for (auto& [score, lemmas] : by_score) {
        std::sort(lemmas.begin(), lemmas.end(), [&](const std::string& a, const std::string& b) {
            return inventory.find(a)->mpq_value < inventory.find(b)->mpq_value;
        });
        scale.tiers.push_back(std::move(lemmas));
    }

    for (const auto& lemma : inventory.category_lemmas(category))
        if (!scale.scores.count(lemma)) scale.uncovered.push_back(lemma);
    return scale;
}

ScaleSet build_all_scales(const std::vector<std::tuple<int, std::string, std::string>>& unique_pairs,
                          const AdjectiveInventory& inventory) {
    std::map<int, std::vector<std::pair<std::string, std::string>>> by_category;
    for (const auto& [category, weak, strong] : unique_pairs)
        by_category[category].emplace_back(weak, strong);

    ScaleSet set;
    for (const auto& [category, relations] : by_category)
        set.scales.push_back(score_category(category, relations, inventory));
    for (int category : inventory.categories())
        if (!by_category.count(category)) set.uncovered_categories.push_back(category);
    return set;
}

std::string render_scale(const CategoryScale& scale, const AdjectiveInventory& inventory) {
    std::ostringstream out;
    out << scale.category << ": <";
    for (std::size_t t = 0; t < scale.tiers.size(); ++t) {
        if (t) out << ", ";
        for (std::size_t i = 0; i < scale.tiers[t].size(); ++i) {
            if (i) out << "/";
            out << inventory.display_form(scale.tiers[t][i]);
        }
    }
    out << ">";
    return out.str();
}

std::string render_scales_report(const ScaleSet& set, const AdjectiveInventory& inventory) {
    std::ostringstream out;
    for (const auto& scale : set.scales) {
        out << render_scale(scale, inventory) << "\n";
        if (!scale.uncovered.empty()) {
            out << "   uncovered:";
            for (const auto& lemma : scale.uncovered) out << " " << lemma;
            out << "\n";
        }
    }
    if (!set.uncovered_categories.empty()) {
        out << "categories without relations:";
        for (int c : set.uncovered_categories) out << " " << c;
        out << "\n";
    }
    return out.str();
}

} // namespace scalemine
