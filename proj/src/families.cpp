#include "nncone/families.hpp"

#include <cmath>
#include <sstream>

#include "nncone/errors.hpp"
#include "nncone/halfline.hpp"

namespace nncone {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t alpha_center(std::size_t n, double alpha) {
    return n * static_cast<std::size_t>(std::ceil(alpha / 2.0));
}

}  // namespace

void validate(const FamilySpec& spec) {
    std::visit(overloaded{
                   [](const LoewyGeneral& f) {
                       if (f.n < 1 || f.m < f.n || f.s > f.m - f.n || !std::isfinite(f.t)) {
                           throw InvalidSpec("loewy family needs m >= n >= 1 and 0 <= s <= m - n");
                       }
                   },
                   [](const Alpha& f) {
                       if (f.n < 1 || !(f.alpha > 0.0) || !std::isfinite(f.alpha)) {
                           throw InvalidSpec("alpha family needs n >= 1 and alpha > 0");
                       }
                   },
                   [](const ConjectureGap& f) {
                       if (f.n < 1 || f.m < f.n || f.s <= f.m || !std::isfinite(f.t)) {
                           throw InvalidSpec("conjecture family needs s > m >= n >= 1");
                       }
                   },
               },
               spec);
}

Polynomial loewy_general(std::size_t n, std::size_t m, std::size_t s, double t) {
    validate(LoewyGeneral{n, m, s, t});
    Polynomial p = Polynomial::monomial(2 * m + n - 1 - s, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        p.set_coeff(k + s, p.coeff(k + s) + 1.0);
        p.set_coeff(2 * m + k - s, p.coeff(2 * m + k - s) + 1.0);
    }
    p.set_coeff(m, p.coeff(m) - t);
    return p;
}

Polynomial alpha_family(std::size_t n, double alpha) {
    validate(Alpha{n, alpha});
    const std::size_t m = alpha_center(n, alpha);
    Polynomial p(std::vector<double>(2 * m + 1, 1.0));
    p.set_coeff(m, -alpha);
    return p;
}

Polynomial conjecture_family(std::size_t n, std::size_t m, std::size_t s, double t) {
    validate(ConjectureGap{n, m, s, t});
    Polynomial p = Polynomial::monomial(s + n - 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        p.set_coeff(k, p.coeff(k) + 1.0);
        p.set_coeff(s + k, p.coeff(s + k) + 1.0);
    }
    p.set_coeff(m, p.coeff(m) - t);
    return p;
}

Polynomial build(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const LoewyGeneral& f) { return loewy_general(f.n, f.m, f.s, f.t); },
                          [](const Alpha& f) { return alpha_family(f.n, f.alpha); },
                          [](const ConjectureGap& f) { return conjecture_family(f.n, f.m, f.s, f.t); },
                      },
                      spec);
}

FamilySpec with_parameter(const FamilySpec& spec, double value) {
    return std::visit(overloaded{
                          [&](LoewyGeneral f) -> FamilySpec { f.t = value; return f; },
                          [&](Alpha f) -> FamilySpec { f.alpha = value; return f; },
                          [&](ConjectureGap f) -> FamilySpec { f.t = value; return f; },
                      },
                      spec);
}

std::size_t family_order(const FamilySpec& spec) {
    return std::visit([](const auto& f) { return f.n; }, spec);
}

std::string family_name(const FamilySpec& spec) {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const LoewyGeneral& f) { os << "loewy(n=" << f.n << ",m=" << f.m << ",s=" << f.s << ",t=" << f.t << ")"; },
                   [&](const Alpha& f) { os << "alpha(n=" << f.n << ",alpha=" << f.alpha << ")"; },
                   [&](const ConjectureGap& f) { os << "conjecture(n=" << f.n << ",m=" << f.m << ",s=" << f.s << ",t=" << f.t << ")"; },
               },
               spec);
    return os.str();
}

MaxTResult max_t(const FamilySpec& spec, const SearchConfig& cfg, double t_hi, double width) {
    validate(spec);
    return max_t([&](double t) { return build(with_parameter(spec, t)); }, family_order(spec), cfg, t_hi, width);
}

AlphaSplit split_alpha(std::size_t n, double alpha) {
    validate(Alpha{n, alpha});
    const auto blocks = static_cast<std::size_t>(std::ceil(alpha / 2.0));
    const std::size_t m = n * blocks;
    AlphaSplit out;
    out.slack_degree = m;
    out.slack = Rational(static_cast<long>(2 * blocks)) - Rational(alpha);
    for (std::size_t s = 0; s < blocks; ++s) {
        Polynomial b = Polynomial::monomial(m + n * (s + 1), 0.0);
        for (std::size_t k = s * n; k < n * (s + 1); ++k) b.set_coeff(k, 1.0);
        for (std::size_t k = m + 1 + s * n; k <= m + n * (s + 1); ++k) b.set_coeff(k, 1.0);
        b.set_coeff(m, -2.0);
        out.blocks.push_back(std::move(b));
    }
    return out;
}

RationalPolynomial reassemble(const AlphaSplit& split) {
    std::vector<Rational> slack(split.slack_degree + 1, Rational(0));
    slack[split.slack_degree] = split.slack;
    RationalPolynomial sum{std::move(slack)};
    for (const auto& b : split.blocks) sum = sum + RationalPolynomial::from_polynomial(b);
    return sum;
}

std::vector<Violation> necessary_conditions(const Polynomial& p_in, std::size_t n) {
    std::vector<Violation> out;
    const Polynomial p = p_in.trimmed();
    if (p.is_zero() || n == 0) return out;
    const std::size_t deg = p.degree();
    for (std::size_t d = 0; d < std::min(n, deg + 1); ++d) {
        if (p.coeff(d) < 0.0) out.push_back({ConditionKind::LowBlock, d});
    }
    for (std::size_t d = deg + 1 > n ? deg + 1 - n : 0; d <= deg; ++d) {
        if (p.coeff(d) < 0.0) out.push_back({ConditionKind::HighBlock, d});
    }
    if (!is_nonneg_on_halfline(RationalPolynomial::from_polynomial(p))) {
        out.push_back({ConditionKind::HalfLine, std::nullopt});
    }
    return out;
}

std::optional<ProjectionGap> projection_gap_example(std::size_t n, std::size_t k, const SearchConfig& cfg) {
    if (n < 1 || k < 2 * n) throw InvalidSpec("projection_gap_example needs k >= 2n");
    if (n == 1) {
        ProjectionGap gap;
        gap.completion = Polynomial::monomial(k - 1) * Polynomial{1.0, -2.0, 1.0};
        gap.projected = Polynomial::monomial(k - 1) * Polynomial{1.0, -2.0};
        return gap;
    }
    // degree of x^j loewy(n, m, s) is j + 2m + n - 1 - s = k + 1
    for (std::size_t m = n; m + 2 * n <= k + 2; ++m) {
        for (std::size_t s = 0; s <= m - n; ++s) {
            const std::size_t base = 2 * m + n - 1 - s;
            if (base > k + 1) continue;
            ProjectionGap gap;
            gap.completion = Polynomial::monomial(k + 1 - base) * loewy_general(n, m, s, 2.0);
            gap.projected = gap.completion;
            gap.projected.set_coeff(k + 1, 0.0);
            gap.projected = gap.projected.trimmed();
            const Verdict v = refute(gap.projected, n, cfg);
            if (const auto* r = std::get_if<Refuted>(&v)) {
                gap.witness = r->witness;
                return gap;
            }
        }
    }
    return std::nullopt;
}

}  // namespace nncone
