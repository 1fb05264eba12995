#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scalemine/inventory.hpp"
#include "scalemine/scales.hpp"
#include "scalemine/tagger.hpp"

namespace scalemine {

enum class Orientation { AWeaker, AStronger, Inconclusive };

std::string_view orientation_name(Orientation o);

struct RelationVerdict {
    enum class Verdict { Agree, Disagree, Inconclusive };

    int category = 0;
    std::string a, b;
    Orientation constructed = Orientation::Inconclusive;
    Orientation reference = Orientation::AWeaker; // never Inconclusive
    Verdict verdict = Verdict::Inconclusive;
};

std::string_view verdict_name(RelationVerdict::Verdict v);

struct AgreementReport {
    std::vector<RelationVerdict> verdicts;
    std::size_t total = 0;
    std::size_t agree = 0;
    std::size_t disagree = 0;
    std::size_t inconclusive = 0;
    double agreement_all = 0.0;              // agree / total
    std::optional<double> agreement_decided; // agree / (agree+disagree); absent if undecidable
    // category -> {agree, disagree, inconclusive}
    std::map<int, std::array<std::size_t, 3>> per_category;
};

// All unordered pairs of scored lemmas: same tier -> Inconclusive, otherwise
// the lower tier's lemma is weaker. Pair order follows the scale.
std::vector<std::pair<std::pair<std::string, std::string>, Orientation>>
enumerate_relations(const CategoryScale& scale);

// Reference orientation from mpq_value (lower = weaker). A scored lemma
// missing from the inventory is an error naming the lemma.
AgreementReport compare_to_reference(const std::vector<CategoryScale>& scales,
                                     const AdjectiveInventory& inventory);

// dot(a,b) / (|a||b|) over the fixed lemma ordering; counts are nonnegative so
// the result is in [0,1]. A zero vector is an error.
double cosine_similarity(const std::map<std::string, std::size_t>& a,
                         const std::map<std::string, std::size_t>& b,
                         const std::vector<std::string>& over);

struct TTestResult {
    double t = 0.0;
    std::size_t df = 0;
    double p_two_sided = 1.0;
    std::size_t n = 0;
    double mean = 0.0;
};

// t = (mean - mu0) / (s / sqrt(n)), df = n-1, two-sided p from the Student t
// distribution. Needs n >= 2 and nonzero sample variance.
TTestResult one_sample_t_test(const std::vector<double>& samples, double mu0);

double student_t_cdf(double t, std::size_t df);
double regularized_incomplete_beta(double a, double b, double x);

// forum -> lemma -> count of inventory surface-form occurrences.
std::map<std::string, std::map<std::string, std::size_t>>
frequency_profile(const std::vector<TaggedPost>& posts, const AdjectiveInventory& inventory);

} // namespace scalemine
