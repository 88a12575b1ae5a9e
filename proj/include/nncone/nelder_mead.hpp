#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace nncone {

struct NelderMeadOptions {
    std::size_t max_evals = 2000;
    double initial_step = 1.0;
    /// Simplex considered collapsed when the spread of values is below this.
    double ftol = 1e-13;
    /// Return as soon as a value below this is seen.
    double stop_below = -std::numeric_limits<double>::infinity();
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t evals = 0;
};

/// Unconstrained Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2). A collapsed simplex is rebuilt around the best vertex with
/// half the previous step while evaluations remain.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts);

}  // namespace nncone
