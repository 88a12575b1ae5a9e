#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "nncone/membership.hpp"
#include "nncone/polynomial.hpp"

namespace nncone {

enum class Bias {
    Exact,        // n = 1: every sample classified by the exact oracle
    UpperBiased,  // n >= 2: a finite search budget can only let outsiders in
};

struct VolumeEstimate {
    std::string target;  // "cone", "projection", or a caller label
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t dim = 0;  // k + 1 coefficients
    std::size_t n_samples = 0;
    std::size_t n_inside = 0;
    std::size_t n_refuted = 0;
    double fraction = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double z = 3.0;
    Bias bias = Bias::Exact;
    double c_cap = 0.0;  // projection estimates only
    SearchConfig cfg;
    std::uint64_t seed = 0;
};

struct WilsonBounds {
    double lo, hi;
};

/// Wilson score interval for inside/total at z standard deviations.
WilsonBounds wilson_interval(std::size_t inside, std::size_t total, double z);

/// Uniform point of the closed unit ball in R^dim.
std::vector<double> sample_ball(std::size_t dim, std::mt19937_64& rng);

/// Classifies a coefficient vector; `seed` is the sample's own substream.
using Classifier = std::function<bool(std::span<const double> coeffs, std::uint64_t seed)>;

/// Fraction of N uniform ball samples the classifier accepts. Sample i draws
/// its point from substream 2i and hands substream 2i+1 to the classifier, so
/// equal seeds give identical points for every classifier.
VolumeEstimate estimate_fraction(std::size_t dim, std::size_t samples, std::uint64_t seed,
                                 const Classifier& inside, double z = 3.0, std::size_t threads = 0);

/// Membership used by the estimators: necessary conditions, then the exact
/// oracle (n = 1) or the refutation search (n >= 2) under cfg.
bool classify_member(const Polynomial& p, std::size_t n, const SearchConfig& cfg);

/// Ball fraction of P_{n,k} in R^{k+1}.
VolumeEstimate estimate_cone_fraction(std::size_t n, std::size_t k, std::size_t samples,
                                      const SearchConfig& cfg, double z = 3.0);

/// Ball fraction of pi(P_{n,k+1}) in R^{k+1}: v is inside iff v + c x^{k+1}
/// survives for c = c_cap, doubled up to 16 c_cap while the rejection could
/// still be undone by a larger c.
VolumeEstimate estimate_projection_fraction(std::size_t n, std::size_t k, std::size_t samples,
                                            const SearchConfig& cfg, double c_cap = 10.0, double z = 3.0);

enum class CompareKind {
    Order,       // P_{n2,k} against P_{n,k}, n2 > n: predicted smaller
    Projection,  // pi(P_{n,k+1}) against P_{n,k}: predicted larger
    Degree,      // P_{n,k+1} in R^{k+2} against P_{n,k} in R^{k+1}: conjectured smaller
    Trend,       // P_{n,k} over a range of k: data only
};

struct CompareParams {
    std::size_t n = 1;
    std::size_t n2 = 2;
    std::size_t k = 4;
    std::vector<std::size_t> ks;  // Trend
    double c_cap = 10.0;
};

enum class CompareStatus {
    Confirmed,     // intervals separated in the predicted direction
    Contradicted,  // separated against the prediction
    Inconclusive,  // intervals overlap at the sample cap
    Data,          // Trend: no claim
};

struct CompareReport {
    CompareKind kind = CompareKind::Order;
    CompareParams params;
    /// Baseline first, comparison second (Trend: one per k).
    std::vector<VolumeEstimate> estimates;
    std::string predicted;
    bool separated = false;
    CompareStatus status = CompareStatus::Inconclusive;
    std::size_t samples = 0;
    std::size_t sample_cap = 0;
};

/// Paired estimates on a shared seed. Samples grow tenfold from `samples` up
/// to `sample_cap` until the two Wilson intervals separate.
CompareReport compare_experiment(CompareKind kind, const CompareParams& params, std::size_t samples,
                                 const SearchConfig& cfg, std::size_t sample_cap, double z = 3.0);

std::string to_string(Bias b);
std::string to_string(CompareKind k);
std::string to_string(CompareStatus s);
CompareKind parse_compare_kind(const std::string& s);

/// k,n,N,fraction,ci_low,ci_high,bias,seed
std::string csv_header();
std::string csv_row(const VolumeEstimate& e);

}  // namespace nncone
