#include "nncone/volume.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nncone/families.hpp"
#include "nncone/perron.hpp"

namespace nncone {

WilsonBounds wilson_interval(std::size_t inside, std::size_t total, double z) {
    if (total == 0) return {0.0, 1.0};
    const double n = static_cast<double>(total);
    const double p = static_cast<double>(inside) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::clamp(std::min(center - half, p), 0.0, 1.0), std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

std::vector<double> sample_ball(std::size_t dim, std::mt19937_64& rng) {
    if (dim == 0) throw std::invalid_argument("sample_ball needs dim >= 1");
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> v(dim);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& x : v) {
            x = gauss(rng);
            norm += x * x;
        }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    const double radius = std::pow(unif(rng), 1.0 / static_cast<double>(dim));
    for (double& x : v) x *= radius / norm;
    return v;
}

VolumeEstimate estimate_fraction(std::size_t dim, std::size_t samples, std::uint64_t seed, const Classifier& inside,
                                 double z, std::size_t threads) {
    if (samples == 0) throw std::invalid_argument("need at least one sample");
    threads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, samples);

    std::atomic<std::size_t> total_inside{0};
    auto worker = [&](std::size_t first, std::size_t stride) {
        std::size_t local = 0;
        for (std::size_t i = first; i < samples; i += stride) {
            std::mt19937_64 rng(derive_seed(seed, 2 * i));
            const auto v = sample_ball(dim, rng);
            if (inside(v, derive_seed(seed, 2 * i + 1))) ++local;
        }
        total_inside += local;
    };
    if (threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    }

    VolumeEstimate e;
    e.target = "custom";
    e.dim = dim;
    e.k = dim - 1;
    e.n_samples = samples;
    e.n_inside = total_inside.load();
    e.n_refuted = samples - e.n_inside;
    e.fraction = static_cast<double>(e.n_inside) / static_cast<double>(samples);
    const auto ci = wilson_interval(e.n_inside, samples, z);
    e.ci_low = ci.lo;
    e.ci_high = ci.hi;
    e.z = z;
    e.seed = seed;
    return e;
}

bool classify_member(const Polynomial& p, std::size_t n, const SearchConfig& cfg) {
    if (!necessary_conditions(p, n).empty()) return false;
    if (n == 1) return true;  // the half-line condition is exact membership
    return !is_refuted(refute(p, n, cfg));
}

namespace {

SearchConfig per_sample(const SearchConfig& cfg, std::uint64_t seed) {
    SearchConfig c = cfg;
    c.seed = seed;
    c.threads = 1;
    return c;
}

// Could a larger top coefficient undo this rejection of v + c x^{k+1}?
enum class Lift { Inside, Escalate, Outside };

Lift classify_lifted(const Polynomial& p, std::size_t n, std::size_t top, double c, const SearchConfig& cfg) {
    const auto violations = necessary_conditions(p, n);
    if (!violations.empty()) {
        const bool only_halfline = std::all_of(violations.begin(), violations.end(),
                                               [](const Violation& v) { return v.kind == ConditionKind::HalfLine; });
        return only_halfline ? Lift::Escalate : Lift::Outside;
    }
    if (n == 1) return Lift::Inside;
    const Verdict v = refute(p, n, cfg);
    const auto* r = std::get_if<Refuted>(&v);
    if (!r) return Lift::Inside;
    // doubling c raises the witness entry by c rho^{k+1} (S^{k+1})_ij
    const Witness& w = r->witness;
    const double gain = static_cast<double>(witness_entry(Polynomial::monomial(top, c), w));
    return gain > -w.value ? Lift::Escalate : Lift::Outside;
}

}  // namespace

VolumeEstimate estimate_cone_fraction(std::size_t n, std::size_t k, std::size_t samples, const SearchConfig& cfg,
                                      double z) {
    if (n == 0) throw std::invalid_argument("matrix order must be >= 1");
    cfg.validate();
    auto e = estimate_fraction(
        k + 1, samples, cfg.seed,
        [&](std::span<const double> v, std::uint64_t s) {
            return classify_member(Polynomial(std::vector<double>(v.begin(), v.end())), n, per_sample(cfg, s));
        },
        z, cfg.threads);
    e.target = "cone";
    e.n = n;
    e.k = k;
    e.bias = n == 1 ? Bias::Exact : Bias::UpperBiased;
    e.cfg = cfg;
    return e;
}

VolumeEstimate estimate_projection_fraction(std::size_t n, std::size_t k, std::size_t samples,
                                            const SearchConfig& cfg, double c_cap, double z) {
    if (n == 0) throw std::invalid_argument("matrix order must be >= 1");
    if (!(c_cap > 0.0)) throw std::invalid_argument("c_cap must be positive");
    cfg.validate();
    const double c_max = 16.0 * c_cap;
    auto e = estimate_fraction(
        k + 1, samples, cfg.seed,
        [&](std::span<const double> v, std::uint64_t s) {
            const SearchConfig local = per_sample(cfg, s);
            Polynomial p(std::vector<double>(v.begin(), v.end()));
            for (double c = c_cap; c <= c_max; c *= 2.0) {
                p.set_coeff(k + 1, c);
                switch (classify_lifted(p, n, k + 1, c, local)) {
                    case Lift::Inside: return true;
                    case Lift::Outside: return false;
                    case Lift::Escalate: break;
                }
            }
            return false;
        },
        z, cfg.threads);
    e.target = "projection";
    e.n = n;
    e.k = k;
    e.bias = n == 1 ? Bias::Exact : Bias::UpperBiased;
    e.c_cap = c_cap;
    e.cfg = cfg;
    return e;
}

namespace {

bool separated(const VolumeEstimate& a, const VolumeEstimate& b) {
    return a.ci_high < b.ci_low || b.ci_high < a.ci_low;
}

}  // namespace

CompareReport compare_experiment(CompareKind kind, const CompareParams& params, std::size_t samples,
                                 const SearchConfig& cfg, std::size_t sample_cap, double z) {
    if (samples == 0) throw std::invalid_argument("need at least one sample");
    CompareReport report;
    report.kind = kind;
    report.params = params;
    report.sample_cap = std::max(sample_cap, samples);

    if (kind == CompareKind::Trend) {
        if (params.ks.empty()) throw std::invalid_argument("trend needs a list of k");
        for (std::size_t k : params.ks) report.estimates.push_back(estimate_cone_fraction(params.n, k, samples, cfg, z));
        report.predicted = "fraction of P_{n,k} tends to 0 as k grows (conjecture; reported as data)";
        report.status = CompareStatus::Data;
        report.samples = samples;
        return report;
    }
    if (kind == CompareKind::Order && params.n2 <= params.n) throw std::invalid_argument("order comparison needs n2 > n");

    // the comparison estimate is predicted to be larger (Projection) or smaller (Order, Degree)
    const bool predict_larger = kind == CompareKind::Projection;
    switch (kind) {
        case CompareKind::Order: report.predicted = "fraction(P_{n2,k}) < fraction(P_{n,k})"; break;
        case CompareKind::Projection: report.predicted = "fraction(pi(P_{n,k+1})) > fraction(P_{n,k})"; break;
        default: report.predicted = "fraction(P_{n,k+1}) < fraction(P_{n,k}) (conjecture)"; break;
    }

    for (std::size_t N = samples;; N *= 10) {
        VolumeEstimate base = estimate_cone_fraction(params.n, params.k, N, cfg, z);
        VolumeEstimate other;
        switch (kind) {
            case CompareKind::Order: other = estimate_cone_fraction(params.n2, params.k, N, cfg, z); break;
            case CompareKind::Projection:
                other = estimate_projection_fraction(params.n, params.k, N, cfg, params.c_cap, z);
                break;
            default: other = estimate_cone_fraction(params.n, params.k + 1, N, cfg, z); break;
        }
        report.samples = N;
        report.separated = separated(base, other);
        report.estimates = {std::move(base), std::move(other)};
        if (report.separated || N * 10 > report.sample_cap) break;
    }
    const auto& a = report.estimates[0];
    const auto& b = report.estimates[1];
    if (!report.separated) {
        report.status = CompareStatus::Inconclusive;
    } else {
        const bool larger = b.fraction > a.fraction;
        report.status = larger == predict_larger ? CompareStatus::Confirmed : CompareStatus::Contradicted;
    }
    return report;
}

std::string to_string(Bias b) {
    return b == Bias::Exact ? "Exact" : "UpperBiased";
}

std::string to_string(CompareKind k) {
    switch (k) {
        case CompareKind::Order: return "order";
        case CompareKind::Projection: return "projection";
        case CompareKind::Degree: return "degree";
        case CompareKind::Trend: return "trend";
    }
    return "?";
}

std::string to_string(CompareStatus s) {
    switch (s) {
        case CompareStatus::Confirmed: return "Confirmed";
        case CompareStatus::Contradicted: return "Contradicted";
        case CompareStatus::Inconclusive: return "Inconclusive";
        case CompareStatus::Data: return "Data";
    }
    return "?";
}

CompareKind parse_compare_kind(const std::string& s) {
    if (s == "order") return CompareKind::Order;
    if (s == "projection") return CompareKind::Projection;
    if (s == "degree") return CompareKind::Degree;
    if (s == "trend") return CompareKind::Trend;
    throw std::invalid_argument("unknown comparison kind: " + s);
}

std::string csv_header() {
    return "k,n,N,fraction,ci_low,ci_high,bias,seed";
}

std::string csv_row(const VolumeEstimate& e) {
    auto shortest = [](double x) {
        char buf[32];
        return std::string(buf, std::to_chars(buf, buf + sizeof buf, x).ptr);
    };
    std::ostringstream os;
    os << e.k << ',' << e.n << ',' << e.n_samples << ',' << shortest(e.fraction) << ',' << shortest(e.ci_low) << ','
       << shortest(e.ci_high) << ',' << to_string(e.bias) << ',' << e.seed;
    return os.str();
}

}  // namespace nncone
