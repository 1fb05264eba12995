#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scalemine/inventory.hpp"
#include "scalemine/patterns.hpp"

namespace scalemine {

struct WeakStrongPair {
    std::string weak;   // lemma
    std::string strong; // lemma
    std::string phrase_id;
    std::string forum;
    std::string pattern_id;

    bool operator==(const WeakStrongPair&) const = default;
};

// Inventory surface forms first, then suffix fallback (-ing/-y stripped, with
// e-restoration and consonant un-doubling checked against the lemma list);
// unknown forms come back unchanged. Idempotent.
std::string lemmatize(std::string_view surface, const AdjectiveInventory& inventory);

// Cartesian product of the phrase's left and right lemma lists, oriented by
// the pattern polarity: MILD left=weak, INTENSE left=strong.
std::vector<WeakStrongPair> extract_pairs(const MatchedPhrase& phrase);

struct PairStats {
    std::size_t total = 0;
    std::map<std::string, std::size_t> per_forum;
    // Pair-membership count per lemma, descending count then lemma.
    std::vector<std::pair<std::string, std::size_t>> lemma_frequency;
    struct Repeated {
        std::string a, b;        // unordered, a <= b (a == b for loops)
        std::size_t forward = 0;  // a -> b occurrences
        std::size_t backward = 0; // b -> a occurrences
    };
    std::vector<Repeated> repeated; // unordered pairs occurring more than once
};

PairStats pair_statistics(const std::vector<WeakStrongPair>& pairs);

std::string render_pair_stats(const PairStats& stats);

} // namespace scalemine
