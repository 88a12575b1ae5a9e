#include "nncone/membership.hpp"

#include <algorithm>
#include <atomic>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "nncone/errors.hpp"
#include "nncone/halfline.hpp"
#include "nncone/nelder_mead.hpp"
#include "nncone/perron.hpp"

namespace nncone {

void SearchConfig::validate() const {
    if (restarts == 0) throw std::invalid_argument("restarts must be >= 1");
    if (!std::isfinite(rho_log_lo) || !std::isfinite(rho_log_hi) || !(rho_log_lo < rho_log_hi)) {
        throw std::invalid_argument("rho_log_range must be a finite nonempty interval");
    }
    if (!(confirm_tol > 0.0)) throw std::invalid_argument("confirm_tol must be positive");
    for (double c : concentrations) {
        if (!(c > 0.0)) throw std::invalid_argument("concentrations must be positive");
    }
}

namespace {

// sum_d |c_d| rho^d: bounds every entry of p(rho S) for stochastic S
long double magnitude_bound(const Polynomial& p, long double rho) {
    long double acc = 0.0L;
    const auto c = p.coeffs();
    for (std::size_t d = c.size(); d-- > 0;) acc = acc * rho + std::abs(static_cast<long double>(c[d]));
    return acc;
}

// Smallest entry of p(e^tau softmax_rows(theta)), normalized by magnitude_bound.
class SearchObjective {
public:
    SearchObjective(const Polynomial& p, std::size_t n, double tau_lo, double tau_hi)
        : p_(p.trimmed()), n_(n), tau_lo_(tau_lo), tau_hi_(tau_hi), s_(n) {}

    std::size_t dim() const { return n_ * (n_ - 1) + 1; }

    double operator()(std::span<const double> z) {
        const double rho = fill(z);
        const double scale = static_cast<double>(magnitude_bound(p_, rho));
        if (!(scale > 0.0) || !std::isfinite(scale)) return std::numeric_limits<double>::infinity();
        return min_entry(eval_matrix(p_, rho * s_)).value / scale;
    }

    /// Writes S into s_ and returns rho.
    double fill(std::span<const double> z) {
        for (std::size_t i = 0; i < n_; ++i) {
            double mx = 0.0;
            for (std::size_t j = 1; j < n_; ++j) mx = std::max(mx, z[i * (n_ - 1) + j - 1]);
            double total = std::exp(-mx);
            s_(i, 0) = total;
            for (std::size_t j = 1; j < n_; ++j) {
                s_(i, j) = std::exp(z[i * (n_ - 1) + j - 1] - mx);
                total += s_(i, j);
            }
            for (std::size_t j = 0; j < n_; ++j) s_(i, j) = std::max(s_(i, j) / total, 1e-300);
        }
        return std::exp(std::clamp(z.back(), tau_lo_, tau_hi_));
    }

    const SquareMatrix& matrix() const { return s_; }

    std::vector<double> logits(const SquareMatrix& s) const {
        std::vector<double> z(dim(), 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 1; j < n_; ++j) z[i * (n_ - 1) + j - 1] = std::log(s(i, j)) - std::log(s(i, 0));
        }
        return z;
    }

private:
    Polynomial p_;
    std::size_t n_;
    double tau_lo_, tau_hi_;
    SquareMatrix s_;
};

SquareMatrix peaked_start(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::bernoulli_distribution coin(0.5);
    if (coin(rng)) {
        // single n-cycle: longest closed walks
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::size_t> cyc(n);
        for (std::size_t k = 0; k < n; ++k) cyc[perm[k]] = perm[(k + 1) % n];
        perm = cyc;
    } else {
        std::shuffle(perm.begin(), perm.end(), rng);
    }
    std::uniform_real_distribution<double> log_delta(std::log(1e-4), std::log(1e-1 / static_cast<double>(n)));
    const double delta = std::exp(log_delta(rng));
    SquareMatrix s(n, delta);
    for (std::size_t i = 0; i < n; ++i) s(i, perm[i]) = 1.0 - delta * static_cast<double>(n - 1);
    return s;
}

Witness make_witness(const Polynomial& p, const SquareMatrix& s, double rho) {
    const EntryRef e = min_entry(eval_matrix(p, rho * s));
    Witness w{s, rho, e.i, e.j, e.value};
    w.value = static_cast<double>(witness_entry(p, w));
    return w;
}

struct RestartOutcome {
    double best = std::numeric_limits<double>::infinity();
    std::optional<Witness> witness;
};

RestartOutcome run_restart(const Polynomial& p, std::size_t n, const SearchConfig& cfg, std::size_t r) {
    std::mt19937_64 rng(derive_seed(cfg.seed, r));
    SearchObjective objective(p, n, cfg.rho_log_lo, cfg.rho_log_hi);

    const std::size_t kinds = cfg.concentrations.size() + 1;
    const std::size_t kind = r % kinds;
    const SquareMatrix start =
        kind < cfg.concentrations.size() ? sample_stochastic(n, rng, cfg.concentrations[kind]) : peaked_start(n, rng);
    std::vector<double> z = objective.logits(start);

    // coarse scan over log rho, jittered per restart
    constexpr int scan = 64;
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    const double offset = jitter(rng);
    double best_tau = cfg.rho_log_lo, best_val = std::numeric_limits<double>::infinity();
    for (int k = 0; k < scan; ++k) {
        z.back() = cfg.rho_log_lo + (cfg.rho_log_hi - cfg.rho_log_lo) * (k + offset) / scan;
        const double v = objective(z);
        if (v < best_val) {
            best_val = v;
            best_tau = z.back();
        }
    }
    z.back() = best_tau;

    NelderMeadOptions opts;
    opts.max_evals = cfg.max_iters > scan ? cfg.max_iters - scan : 1;
    opts.initial_step = 1.0;
    opts.stop_below = -1e-3;
    const auto result = nelder_mead([&](std::span<const double> x) { return objective(x); }, z, opts);

    RestartOutcome out;
    out.best = std::min(best_val, result.value);
    if (result.value < 0.0) {
        const double rho = objective.fill(result.x);
        Witness w = make_witness(p, objective.matrix(), rho);
        if (confirm_witness(p, w, cfg.confirm_tol)) out.witness = std::move(w);
    }
    return out;
}

}  // namespace

long double witness_entry(const Polynomial& p, const Witness& w) {
    const std::size_t n = w.s.order();
    const std::size_t deg = p.degree();
    std::vector<long double> a(n * n), acc(n * n, 0.0L), tmp(n * n);
    for (std::size_t k = 0; k < n * n; ++k) a[k] = static_cast<long double>(w.rho) * w.s.data()[k];
    for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = p.coeff(deg);
    for (std::size_t d = deg; d-- > 0;) {
        std::fill(tmp.begin(), tmp.end(), 0.0L);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const long double aik = acc[i * n + k];
                for (std::size_t j = 0; j < n; ++j) tmp[i * n + j] += aik * a[k * n + j];
            }
        }
        acc.swap(tmp);
        for (std::size_t i = 0; i < n; ++i) acc[i * n + i] += p.coeff(d);
    }
    return acc[w.i * n + w.j];
}

Rational exact_witness_entry(const Polynomial& p, const Witness& w) {
    const std::size_t n = w.s.order();
    const Rational rho(w.rho);
    std::vector<Rational> a(n * n), acc(n * n, Rational(0)), tmp(n * n);
    for (std::size_t k = 0; k < n * n; ++k) a[k] = rho * Rational(w.s.data()[k]);
    const std::size_t deg = p.degree();
    for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = Rational(p.coeff(deg));
    for (std::size_t d = deg; d-- > 0;) {
        for (auto& v : tmp) v = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t j = 0; j < n; ++j) tmp[i * n + j] += acc[i * n + k] * a[k * n + j];
            }
        }
        acc.swap(tmp);
        for (std::size_t i = 0; i < n; ++i) acc[i * n + i] += Rational(p.coeff(d));
    }
    return acc[w.i * n + w.j];
}

bool confirm_witness(const Polynomial& p, const Witness& w, double tol) {
    const std::size_t n = w.s.order();
    if (n == 0 || w.i >= n || w.j >= n) return false;
    if (!(w.rho > 0.0) || !std::isfinite(w.rho)) return false;
    for (double v : w.s.data()) {
        if (!(v > 0.0) || !std::isfinite(v)) return false;
    }
    if (row_sum_error(w.s) > 1e-12) return false;

    const long double entry = witness_entry(p, w);
    const long double noise = 4.0L * static_cast<long double>((p.degree() + 1) * n) * LDBL_EPSILON *
                              magnitude_bound(p, static_cast<long double>(w.rho));
    return entry < -std::max(static_cast<long double>(tol), noise);
}

bool scalar_walk_check(double w, double rho, unsigned ell, double t) {
    const double y = w * std::pow(rho, static_cast<double>(ell));
    return 1.0 - t * y + y * y >= 0.0;
}

Verdict refute(const Polynomial& p_in, std::size_t n, const SearchConfig& cfg) {
    if (n == 0) throw std::invalid_argument("matrix order must be >= 1");
    cfg.validate();
    const Polynomial p = p_in.trimmed();

    const auto rational = RationalPolynomial::from_polynomial(p);
    const auto x0 = refute_halfline(rational);
    if (n == 1) {
        if (!x0) return ExactMember{};
        Witness w{SquareMatrix(1, 1.0), x0->get_d(), 0, 0, 0.0};
        w.value = static_cast<double>(witness_entry(p, w));
        return Refuted{std::move(w), WitnessSource::ExactHalfline, 0};
    }

    if (p.is_zero()) return NoRefutationFound{0, 0.0};

    // P_n is inside P_1: try the half-line witness on the uniform matrix first
    if (x0) {
        Witness w = make_witness(p, SquareMatrix(n, 1.0 / static_cast<double>(n)), x0->get_d());
        if (confirm_witness(p, w, cfg.confirm_tol)) return Refuted{std::move(w), WitnessSource::ScalarLift, 0};
    }

    const std::size_t restarts = cfg.restarts;
    std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, restarts);

    std::vector<RestartOutcome> outcomes(restarts);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> found{restarts};
    auto worker = [&] {
        for (std::size_t r = next++; r < restarts; r = next++) {
            if (r > found.load()) continue;
            outcomes[r] = run_restart(p, n, cfg, r);
            if (outcomes[r].witness) {
                std::size_t cur = found.load();
                while (r < cur && !found.compare_exchange_weak(cur, r)) {
                }
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
    }

    if (const std::size_t r = found.load(); r < restarts) {
        return Refuted{std::move(*outcomes[r].witness), WitnessSource::Search, r};
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& o : outcomes) best = std::min(best, o.best);
    return NoRefutationFound{restarts, best};
}

MaxTResult max_t(const std::function<Polynomial(double)>& family, std::size_t n, const SearchConfig& cfg,
                 double t_hi, double width) {
    if (!(width > 0.0) || !(t_hi > 0.0)) throw std::invalid_argument("max_t needs t_hi > 0 and width > 0");
    MaxTResult out;
    const bool top = is_refuted(refute(family(t_hi), n, cfg));
    out.trace.push_back({t_hi, top});
    if (!top) throw NoUpperRefutation("family not refuted at t_hi = " + std::to_string(t_hi));
    out.lo = 0.0;
    out.hi = t_hi;
    while (out.hi - out.lo > width) {
        const double mid = 0.5 * (out.lo + out.hi);
        const bool refuted = is_refuted(refute(family(mid), n, cfg));
        out.trace.push_back({mid, refuted});
        (refuted ? out.hi : out.lo) = mid;
    }
    return out;
}

double boundary_offset(const Polynomial& g, const Polynomial& u, std::size_t n, const SearchConfig& cfg,
                       double mu_hi, double rel_width) {
    if (!(mu_hi > 0.0) || !(rel_width > 0.0)) throw std::invalid_argument("boundary_offset needs mu_hi, rel_width > 0");
    if (is_refuted(refute(g, n, cfg))) throw BadBracket("base polynomial is refuted");
    if (!is_refuted(refute(g + mu_hi * u, n, cfg))) throw BadBracket("g + mu_hi u is not refuted");
    double lo = 0.0, hi = mu_hi;
    while (hi - lo > rel_width * mu_hi) {
        const double mid = 0.5 * (lo + hi);
        (is_refuted(refute(g + mid * u, n, cfg)) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

SliceTrace trace_slice(const Polynomial& p, const Polynomial& q, const Polynomial& u, std::size_t n,
                       std::size_t grid, const SearchConfig& cfg, double mu_hi) {
    if (grid == 0) throw std::invalid_argument("trace_slice needs grid >= 1");
    SliceTrace out;
    for (std::size_t k = 1; k <= grid; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(grid + 1);
        const Polynomial g = (1.0 - t) * p + t * q;
        SlicePoint pt{t, std::nullopt};
        try {
            pt.mu = boundary_offset(g, u, n, cfg, mu_hi);
        } catch (const BadBracket&) {
        }
        out.points.push_back(pt);
    }

    std::vector<std::pair<double, double>> xy;
    for (const auto& pt : out.points) {
        if (pt.mu) xy.emplace_back(pt.t, *pt.mu);
    }
    if (xy.size() < 3) return out;
    const double m = static_cast<double>(xy.size());
    double sx = 0, sy = 0;
    for (auto [x, y] : xy) sx += x, sy += y;
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (auto [x, y] : xy) sxx += (x - mx) * (x - mx), sxy += (x - mx) * (y - my);
    const double slope = sxy / sxx;
    const double norm = std::sqrt(1.0 + slope * slope);
    for (auto [x, y] : xy) out.residual = std::max(out.residual, std::abs(y - my - slope * (x - mx)) / norm);
    return out;
}

}  // namespace nncone
