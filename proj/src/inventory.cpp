#include "scalemine/inventory.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "scalemine/errors.hpp"

namespace scalemine {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(trim(s.substr(start)));
            break;
        }
        parts.push_back(trim(s.substr(start, pos - start)));
        start = pos + 1;
    }
    return parts;
}

} // namespace

AdjectiveInventory AdjectiveInventory::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read inventory file: " + path.string());

    std::vector<InventoryEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        auto fields = split(stripped, ',');
        if (fields.size() != 4)
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": expected 'lemma, category, mpq_value, forms'");
        InventoryEntry e;
        e.lemma = fields[0];
        try {
            e.category = std::stoi(fields[1]);
            e.mpq_value = std::stoi(fields[2]);
        } catch (const std::exception&) {
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": category and mpq_value must be integers");
        }
        for (auto& f : split(fields[3], '|'))
            if (!f.empty()) e.surface_forms.push_back(std::move(f));
        if (e.lemma.empty() || e.surface_forms.empty())
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": empty lemma or surface form list");
        entries.push_back(std::move(e));
    }
    return from_entries(std::move(entries));
}

AdjectiveInventory AdjectiveInventory::from_entries(std::vector<InventoryEntry> entries) {
    AdjectiveInventory inv;
    inv.entries_ = std::move(entries);

    std::map<int, std::vector<int>> values_by_category;
    for (std::size_t i = 0; i < inv.entries_.size(); ++i) {
        const auto& e = inv.entries_[i];
        if (e.category <= 0 || e.mpq_value <= 0)
            throw DataError("inventory entry '" + e.lemma + "': category and mpq_value must be positive");
        if (!inv.by_lemma_.emplace(e.lemma, i).second)
            throw DataError("duplicate inventory lemma '" + e.lemma + "'");
        values_by_category[e.category].push_back(e.mpq_value);
        for (const auto& f : e.surface_forms) {
            auto [it, inserted] = inv.by_surface_.emplace(f, e.lemma);
            if (!inserted && it->second != e.lemma)
                throw DataError("surface form '" + f + "' maps to both '" + it->second +
                                "' and '" + e.lemma + "'");
        }
    }
    for (auto& [cat, values] : values_by_category) {
        if (values.size() < 2)
            throw DataError("inventory category " + std::to_string(cat) + " has fewer than 2 entries");
        std::sort(values.begin(), values.end());
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] != static_cast<int>(i) + 1)
                throw DataError("inventory category " + std::to_string(cat) +
                                ": mpq_values must be consecutive starting at 1");
        }
    }
    return inv;
}

bool AdjectiveInventory::is_lemma(std::string_view lemma) const {
    return by_lemma_.find(lemma) != by_lemma_.end();
}

const InventoryEntry* AdjectiveInventory::find(std::string_view lemma) const {
    auto it = by_lemma_.find(lemma);
    return it == by_lemma_.end() ? nullptr : &entries_[it->second];
}

std::optional<std::string> AdjectiveInventory::lemma_for_surface(std::string_view surface) const {
    auto it = by_surface_.find(surface);
    if (it == by_surface_.end()) return std::nullopt;
    return it->second;
}

std::string AdjectiveInventory::display_form(std::string_view lemma) const {
    const InventoryEntry* e = find(lemma);
    return e ? e->surface_forms.front() : std::string(lemma);
}

std::vector<std::string> AdjectiveInventory::category_lemmas(int category) const {
    std::vector<const InventoryEntry*> in_cat;
    for (const auto& e : entries_)
        if (e.category == category) in_cat.push_back(&e);
    std::sort(in_cat.begin(), in_cat.end(),
              [](const InventoryEntry* a, const InventoryEntry* b) {
                  return a->mpq_value < b->mpq_value;
              });
    std::vector<std::string> out;
    for (const auto* e : in_cat) out.push_back(e->lemma);
    return out;
}

std::vector<int> AdjectiveInventory::categories() const {
    std::set<int> cats;
    for (const auto& e : entries_) cats.insert(e.category);
    return {cats.begin(), cats.end()};
}

std::vector<std::string> AdjectiveInventory::lemma_order() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.lemma);
    return out;
}

} // namespace scalemine
