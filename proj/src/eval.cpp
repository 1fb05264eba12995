#include "scalemine/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "scalemine/errors.hpp"

namespace scalemine {

std::string_view orientation_name(Orientation o) {
    switch (o) {
        case Orientation::AWeaker: return "A_WEAKER";
        case Orientation::AStronger: return "A_STRONGER";
        case Orientation::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

std::string_view verdict_name(RelationVerdict::Verdict v) {
    switch (v) {
        case RelationVerdict::Verdict::Agree: return "AGREE";
        case RelationVerdict::Verdict::Disagree: return "DISAGREE";
        case RelationVerdict::Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

std::vector<std::pair<std::pair<std::string, std::string>, Orientation>>
enumerate_relations(const CategoryScale& scale) {
    std::vector<std::pair<std::string, std::size_t>> flat; // lemma, tier index
    for (std::size_t t = 0; t < scale.tiers.size(); ++t)
        for (const auto& lemma : scale.tiers[t]) flat.emplace_back(lemma, t);

    std::vector<std::pair<std::pair<std::string, std::string>, Orientation>> out;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        for (std::size_t j = i + 1; j < flat.size(); ++j) {
            Orientation o = flat[i].second == flat[j].second ? Orientation::Inconclusive
                                                             : Orientation::AWeaker;
            out.push_back({{flat[i].first, flat[j].first}, o});
        }
    }
    return out;
}

AgreementReport compare_to_reference(const std::vector<CategoryScale>& scales,
                                     const AdjectiveInventory& inventory) {
    AgreementReport report;
    for (const auto& scale : scales) {
        auto& bucket = report.per_category[scale.category];
        for (const auto& [pair, constructed] : enumerate_relations(scale)) {
            const auto& [a, b] = pair;
            const InventoryEntry* ea = inventory.find(a);
            const InventoryEntry* eb = inventory.find(b);
            if (!ea) throw DataError("lemma '" + a + "' has no mpq_value in the inventory");
            if (!eb) throw DataError("lemma '" + b + "' has no mpq_value in the inventory");

            RelationVerdict v;
            v.category = scale.category;
            v.a = a;
            v.b = b;
            v.constructed = constructed;
            v.reference = ea->mpq_value < eb->mpq_value ? Orientation::AWeaker
                                                        : Orientation::AStronger;
            if (constructed == Orientation::Inconclusive) {
                v.verdict = RelationVerdict::Verdict::Inconclusive;
                ++report.inconclusive;
                ++bucket[2];
            } else if (constructed == v.reference) {
                v.verdict = RelationVerdict::Verdict::Agree;
                ++report.agree;
                ++bucket[0];
            } else {
                v.verdict = RelationVerdict::Verdict::Disagree;
                ++report.disagree;
                ++bucket[1];
            }
            report.verdicts.push_back(std::move(v));
        }
    }
    report.total = report.agree + report.disagree + report.inconclusive;
    report.agreement_all =
        report.total ? static_cast<double>(report.agree) / static_cast<double>(report.total) : 0.0;
    if (report.agree + report.disagree > 0)
        report.agreement_decided = static_cast<double>(report.agree) /
                                   static_cast<double>(report.agree + report.disagree);
    return report;
}

double cosine_similarity(const std::map<std::string, std::size_t>& a,
                         const std::map<std::string, std::size_t>& b,
                         const std::vector<std::string>& over) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& lemma : over) {
        auto ia = a.find(lemma);
        auto ib = b.find(lemma);
        double va = ia == a.end() ? 0.0 : static_cast<double>(ia->second);
        double vb = ib == b.end() ? 0.0 : static_cast<double>(ib->second);
        dot += va * vb;
        na += va * va;
        nb += vb * vb;
    }
    if (na == 0.0 || nb == 0.0)
        throw DataError("cosine similarity of a zero vector is undefined");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

namespace {

// Continued-fraction evaluation of the incomplete beta function (Lentz).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kFpMin = 1e-300;

    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw InternalError("incomplete beta continued fraction did not converge");
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0)
        throw InternalError("regularized_incomplete_beta: parameters must be positive");
    if (x < 0.0 || x > 1.0)
        throw InternalError("regularized_incomplete_beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, std::size_t df) {
    if (df == 0) throw DataError("student t distribution needs df >= 1");
    double v = static_cast<double>(df);
    double x = v / (v + t * t);
    double tail = 0.5 * regularized_incomplete_beta(v / 2.0, 0.5, x); // P(T > |t|)
    return t >= 0.0 ? 1.0 - tail : tail;
}

TTestResult one_sample_t_test(const std::vector<double>& samples, double mu0) {
    if (samples.size() < 2) throw DataError("t-test needs at least 2 samples");
    TTestResult r;
    r.n = samples.size();
    double n = static_cast<double>(r.n);
    double mean = 0.0;
    for (double x : samples) mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    double var = ss / (n - 1.0);
    if (var == 0.0) throw DataError("t-test undefined for zero sample variance");
    r.mean = mean;
    r.t = (mean - mu0) / (std::sqrt(var) / std::sqrt(n));
    r.df = r.n - 1;
    double v = static_cast<double>(r.df);
    r.p_two_sided = regularized_incomplete_beta(v / 2.0, 0.5, v / (v + r.t * r.t));
    return r;
}

std::map<std::string, std::map<std::string, std::size_t>>
frequency_profile(const std::vector<TaggedPost>& posts, const AdjectiveInventory& inventory) {
    std::map<std::string, std::map<std::string, std::size_t>> profile;
    for (const auto& post : posts) {
        auto& counts = profile[post.forum];
        for (const auto& tok : post.tokens)
            if (auto lemma = inventory.lemma_for_surface(tok.surface)) ++counts[*lemma];
    }
    return profile;
}

} // namespace scalemine
