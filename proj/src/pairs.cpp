#include "scalemine/pairs.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "scalemine/errors.hpp"

namespace scalemine {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Candidate base forms for a stripped suffix: as-is, with e restored
// (ach -> ache), and with a doubled final consonant undoubled (throbb -> throb).
std::vector<std::string> base_candidates(std::string stem) {
    std::vector<std::string> out;
    out.push_back(stem);
    out.push_back(stem + "e");
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2])
        out.push_back(stem.substr(0, stem.size() - 1));
    return out;
}

} // namespace

std::string lemmatize(std::string_view surface, const AdjectiveInventory& inventory) {
    if (auto lemma = inventory.lemma_for_surface(surface)) return *lemma;
    auto try_suffix = [&](std::string_view suffix) -> std::optional<std::string> {
        if (!ends_with(surface, suffix) || surface.size() <= suffix.size())
            return std::nullopt;
        std::string stem(surface.substr(0, surface.size() - suffix.size()));
        for (auto& cand : base_candidates(std::move(stem)))
            if (inventory.is_lemma(cand)) return cand;
        return std::nullopt;
    };
    if (auto l = try_suffix("ing")) return *l;
    if (auto l = try_suffix("y")) return *l;
    return std::string(surface);
}

std::vector<WeakStrongPair> extract_pairs(const MatchedPhrase& phrase) {
    std::vector<WeakStrongPair> pairs;
    pairs.reserve(phrase.left_lemmas.size() * phrase.right_lemmas.size());
    for (const auto& left : phrase.left_lemmas) {
        for (const auto& right : phrase.right_lemmas) {
            WeakStrongPair p;
            if (phrase.polarity == Polarity::Mild) {
                p.weak = left;
                p.strong = right;
            } else {
                p.weak = right;
                p.strong = left;
            }
            p.phrase_id = phrase.phrase_id;
            p.forum = phrase.forum;
            p.pattern_id = phrase.pattern_id;
            pairs.push_back(std::move(p));
        }
    }
    return pairs;
}

PairStats pair_statistics(const std::vector<WeakStrongPair>& pairs) {
    PairStats stats;
    stats.total = pairs.size();

    std::map<std::string, std::size_t> lemma_count;
    std::map<std::pair<std::string, std::string>, std::pair<std::size_t, std::size_t>> unordered;
    for (const auto& p : pairs) {
        ++stats.per_forum[p.forum];
        ++lemma_count[p.weak];
        if (p.strong != p.weak) ++lemma_count[p.strong];
        if (p.weak <= p.strong)
            ++unordered[{p.weak, p.strong}].first;
        else
            ++unordered[{p.strong, p.weak}].second;
    }

    stats.lemma_frequency.assign(lemma_count.begin(), lemma_count.end());
    std::sort(stats.lemma_frequency.begin(), stats.lemma_frequency.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });

    for (const auto& [key, counts] : unordered) {
        if (counts.first + counts.second < 2) continue;
        PairStats::Repeated r;
        r.a = key.first;
        r.b = key.second;
        r.forward = counts.first;
        r.backward = counts.second;
        stats.repeated.push_back(std::move(r));
    }
    return stats;
}

std::string render_pair_stats(const PairStats& stats) {
    std::ostringstream out;
    out << "weak-strong pairs: " << stats.total << "\n";
    out << "per forum:\n";
    for (const auto& [forum, n] : stats.per_forum)
        out << "  " << forum << ": " << n << "\n";
    out << "lemma frequency (pair memberships):\n";
    for (const auto& [lemma, n] : stats.lemma_frequency)
        out << "  " << lemma << ": " << n << "\n";
    out << "repeated unordered pairs:\n";
    for (const auto& r : stats.repeated) {
        out << "  {" << r.a << ", " << r.b << "}: " << (r.forward + r.backward)
            << " (" << r.a << "->" << r.b << ": " << r.forward
            << ", " << r.b << "->" << r.a << ": " << r.backward << ")\n";
    }
    return out.str();
}

} // namespace scalemine
