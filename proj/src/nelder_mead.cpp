#include "nncone/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nncone {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
    const std::size_t dim = x0.size();
    NelderMeadResult best{x0, 0.0, 0};
    auto eval = [&](const std::vector<double>& x) {
        double v = f(x);
        if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
        ++best.evals;
        if (best.evals == 1 || v < best.value) {
            best.value = v;
            best.x = x;
        }
        return v;
    };

    eval(x0);
    if (dim == 0) return best;

    double step = opts.initial_step;
    std::vector<std::vector<double>> simplex(dim + 1);
    std::vector<double> values(dim + 1);
    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);

    auto done = [&] { return best.evals >= opts.max_evals || best.value < opts.stop_below; };

    while (!done()) {
        simplex[0] = best.x;
        values[0] = best.value;
        for (std::size_t k = 0; k < dim && !done(); ++k) {
            simplex[k + 1] = best.x;
            simplex[k + 1][k] += step;
            values[k + 1] = eval(simplex[k + 1]);
        }
        if (done()) break;

        while (!done()) {
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
            const std::size_t lo = order.front(), hi = order.back(), second = order[dim - 1];
            if (std::abs(values[hi] - values[lo]) <= opts.ftol * (std::abs(values[lo]) + 1e-300)) break;

            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t v = 0; v <= dim; ++v) {
                if (v == hi) continue;
                for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[v][k];
            }
            for (double& c : centroid) c /= static_cast<double>(dim);

            for (std::size_t k = 0; k < dim; ++k) trial[k] = centroid[k] + (centroid[k] - simplex[hi][k]);
            const double fr = eval(trial);
            if (fr < values[lo]) {
                for (std::size_t k = 0; k < dim; ++k) trial2[k] = centroid[k] + 2.0 * (centroid[k] - simplex[hi][k]);
                const double fe = eval(trial2);
                if (fe < fr) {
                    simplex[hi] = trial2;
                    values[hi] = fe;
                } else {
                    simplex[hi] = trial;
                    values[hi] = fr;
                }
                continue;
            }
            if (fr < values[second]) {
                simplex[hi] = trial;
                values[hi] = fr;
                continue;
            }
            const bool outside = fr < values[hi];
            for (std::size_t k = 0; k < dim; ++k) {
                const double from = outside ? trial[k] : simplex[hi][k];
                trial2[k] = centroid[k] + 0.5 * (from - centroid[k]);
            }
            const double fc = eval(trial2);
            if (fc < std::min(fr, values[hi])) {
                simplex[hi] = trial2;
                values[hi] = fc;
                continue;
            }
            for (std::size_t v = 0; v <= dim && !done(); ++v) {
                if (v == lo) continue;
                for (std::size_t k = 0; k < dim; ++k) simplex[v][k] = simplex[lo][k] + 0.5 * (simplex[v][k] - simplex[lo][k]);
                values[v] = eval(simplex[v]);
            }
        }
        step *= 0.5;
        if (step < 1e-8) step = opts.initial_step;
    }
    return best;
}

}  // namespace nncone
