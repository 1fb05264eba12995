#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scalemine {

struct InventoryEntry {
    std::string lemma;
    int category = 0;
    int mpq_value = 0;
    // Inflected forms recognized in text. The first one is the display form
    // used when rendering scales.
    std::vector<std::string> surface_forms;
};

// The reference adjective inventory: lemma -> (category, within-category rank)
// plus the surface forms that map back to each lemma.
class AdjectiveInventory {
public:
    // File format, one entry per line:
    //   lemma, category, mpq_value, form1|form2|...
    // '#' starts a comment. Every category needs at least two entries and
    // consecutive mpq_values starting at 1.
    static AdjectiveInventory load(const std::filesystem::path& path);
    static AdjectiveInventory from_entries(std::vector<InventoryEntry> entries);

    const std::vector<InventoryEntry>& entries() const { return entries_; }

    bool is_lemma(std::string_view lemma) const;
    const InventoryEntry* find(std::string_view lemma) const;

    std::optional<std::string> lemma_for_surface(std::string_view surface) const;

    // Display form for rendered scales; returns the lemma itself if unknown.
    std::string display_form(std::string_view lemma) const;

    // Lemmas of one category ordered by mpq_value.
    std::vector<std::string> category_lemmas(int category) const;
    std::vector<int> categories() const;

    // All lemmas in file order; fixed ordering for frequency vectors.
    std::vector<std::string> lemma_order() const;

private:
    std::vector<InventoryEntry> entries_;
    std::map<std::string, std::size_t, std::less<>> by_lemma_;
    std::map<std::string, std::string, std::less<>> by_surface_;
};

} // namespace scalemine
