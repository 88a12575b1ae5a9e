#include "nncone/halfline.hpp"

#include <stdexcept>

namespace nncone {
namespace {

int sign_variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Divide out every factor of x.
RationalPolynomial strip_zero_root(RationalPolynomial p) {
    while (!p.is_zero() && sgn(p.coeff(0)) == 0) {
        std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = RationalPolynomial(std::move(c));
    }
    return p;
}

// Square-free part with the root at zero removed.
RationalPolynomial positive_radical(const RationalPolynomial& p) {
    const RationalPolynomial g = gcd(p, p.derivative());
    return strip_zero_root(divmod(p, g).first.normalized());
}

struct Interval {
    Rational lo, hi;  // exactly one root in (lo, hi); neither endpoint is a root
};

// Split point of (a, b) that is not a root of q.
Rational split_point(const RationalPolynomial& q, const Rational& a, const Rational& b) {
    Rational m = (a + b) / 2;
    Rational step = (b - a) / 4;
    while (q.sign_at(m) == 0) {
        m -= step;  // stays inside (a, b); q has finitely many roots
        step /= 2;
    }
    return m;
}

void isolate(const RationalPolynomial& q, const SturmSequence& sturm, const Rational& a,
             const Rational& b, int count, std::vector<Interval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({a, b});
        return;
    }
    const Rational m = split_point(q, a, b);
    const int left = sturm.count_roots(a, m);
    isolate(q, sturm, a, m, left, out);
    isolate(q, sturm, m, b, count - left, out);
}

}  // namespace

SturmSequence::SturmSequence(const RationalPolynomial& squarefree) {
    if (squarefree.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    chain_.push_back(squarefree.normalized());
    if (squarefree.degree() < 1) return;
    chain_.push_back(squarefree.derivative().normalized());
    while (chain_.back().degree() > 0) {
        auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
        if (r.is_zero()) break;
        chain_.push_back((r * Rational(-1)).normalized());
    }
}

int SturmSequence::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& f : chain_) signs.push_back(f.sign_at(x));
    return sign_variations(signs);
}

int SturmSequence::variations_at_infinity() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& f : chain_) signs.push_back(f.is_zero() ? 0 : sgn(f.lead()));
    return sign_variations(signs);
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

bool is_nonneg_on_halfline(const RationalPolynomial& p) {
    if (p.is_zero()) return true;
    if (sgn(p.lead()) < 0) return false;
    if (sgn(p.coeff(0)) < 0) return false;
    if (p.degree() == 0) return true;

    // p changes sign on (0, inf) exactly at its odd-multiplicity roots there.
    const auto factors = squarefree_factors(p);
    RationalPolynomial odd(std::vector<Rational>{Rational(1)});
    for (std::size_t i = 0; i < factors.size(); i += 2) odd = odd * factors[i];
    odd = strip_zero_root(odd);
    if (odd.degree() < 1) return true;

    const SturmSequence sturm(odd);
    return sturm.count_roots(Rational(0), cauchy_bound(odd)) == 0;
}

std::optional<Rational> refute_halfline(const RationalPolynomial& p) {
    if (is_nonneg_on_halfline(p)) return std::nullopt;

    // Gaps between consecutive positive roots; p has one sign on each.
    std::vector<std::pair<Rational, Rational>> gaps;
    const RationalPolynomial radical = p.degree() >= 1 ? positive_radical(p) : RationalPolynomial{};
    if (radical.degree() < 1) {
        const Rational bound = p.degree() >= 1 ? cauchy_bound(p) : Rational(1);
        gaps.emplace_back(Rational(0), bound);
    } else {
        const SturmSequence sturm(radical);
        const Rational bound = cauchy_bound(radical);
        std::vector<Interval> roots;
        isolate(radical, sturm, Rational(0), bound, sturm.count_roots(Rational(0), bound), roots);
        if (roots.empty()) {
            gaps.emplace_back(Rational(0), bound);
        } else {
            auto& first = roots.front();
            while (sgn(first.lo) == 0) {
                const Rational m = split_point(radical, first.lo, first.hi);
                if (sturm.count_roots(first.lo, m) == 1) {
                    first.hi = m;
                } else {
                    first.lo = m;
                }
            }
            gaps.emplace_back(Rational(0), first.lo);
            for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
                gaps.emplace_back(roots[k].hi, roots[k + 1].lo);
            }
            gaps.emplace_back(roots.back().hi, bound);
        }
    }

    std::optional<Rational> best;
    Rational best_value = 0;
    constexpr int probes = 8;
    for (const auto& [a, b] : gaps) {
        for (int k = 1; k <= probes; ++k) {
            const Rational x = a + (b - a) * k / probes;
            if (sgn(x) <= 0) continue;
            const Rational v = p.eval(x);
            if (v < best_value) {
                best_value = v;
                best = x;
            }
        }
    }
    if (!best) throw std::logic_error("refute_halfline: oracle rejected p but no negative gap found");
    return best;
}

}  // namespace nncone
