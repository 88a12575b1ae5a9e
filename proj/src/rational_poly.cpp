#include "nncone/rational_poly.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace nncone {

RationalPolynomial::RationalPolynomial(std::vector<Rational> c) : c_(std::move(c)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

void RationalPolynomial::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RationalPolynomial RationalPolynomial::from_polynomial(const Polynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (double v : p.coeffs()) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite coefficient");
        c.emplace_back(v);
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::x_power(std::size_t d) {
    std::vector<Rational> c(d + 1, Rational(0));
    c[d] = 1;
    return RationalPolynomial(std::move(c));
}

RationalPolynomial::Rounded RationalPolynomial::to_polynomial() const {
    std::vector<double> c;
    c.reserve(c_.size());
    Rounding r = Rounding::Exact;
    for (const auto& q : c_) {
        const double v = q.get_d();
        if (Rational(v) != q) r = Rounding::Nearest;
        c.push_back(v);
    }
    return {Polynomial(std::move(c)), r};
}

Rational RationalPolynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t d = c_.size(); d-- > 0;) {
        acc *= x;
        acc += c_[d];
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t d = 1; d < c_.size(); ++d) c[d - 1] = c_[d] * static_cast<long>(d);
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::normalized() const {
    if (is_zero()) return {};
    const Rational scale = abs(lead());
    std::vector<Rational> c(c_.size());
    for (std::size_t d = 0; d < c_.size(); ++d) c[d] = c_[d] / scale;
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t d = 0; d < a.c_.size(); ++d) c[d] += a.c_[d];
    for (std::size_t d = 0; d < b.c_.size(); ++d) c[d] += b.c_[d];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t d = 0; d < a.c_.size(); ++d) c[d] += a.c_[d];
    for (std::size_t d = 0; d < b.c_.size(); ++d) c[d] -= b.c_[d];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const Rational& s) {
    std::vector<Rational> c(a.c_);
    for (auto& q : c) q *= s;
    return RationalPolynomial(std::move(c));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
    std::vector<Rational> rem(a.coeffs());
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Rational> quo(rem.size() - db, Rational(0));
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational f = rem[k + db] / bc[db];
        quo[k] = f;
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * bc[j];
    }
    rem.resize(db);
    return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial x = a, y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x * Rational(1 / x.lead());
}

std::vector<RationalPolynomial> squarefree_factors(const RationalPolynomial& p) {
    std::vector<RationalPolynomial> out;
    if (p.degree() < 1) return out;
    const RationalPolynomial f = p * Rational(1 / p.lead());
    const RationalPolynomial df = f.derivative();
    RationalPolynomial a = gcd(f, df);
    RationalPolynomial b = divmod(f, a).first;
    RationalPolynomial c = divmod(df, a).first;
    RationalPolynomial d = c - b.derivative();
    while (b.degree() > 0) {
        a = gcd(b, d);
        out.push_back(a);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

Rational cauchy_bound(const RationalPolynomial& p) {
    Rational m = 0;
    const auto& c = p.coeffs();
    for (std::size_t d = 0; d + 1 < c.size(); ++d) {
        Rational r = abs(c[d] / p.lead());
        if (r > m) m = r;
    }
    return m + 1;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(const std::string& s) {
    if (s.find('/') != std::string::npos) {
        Rational q;
        if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) {
            throw std::invalid_argument("bad rational literal: " + s);
        }
        q.canonicalize();
        return q;
    }
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
    std::string digits;
    long exponent = 0;
    bool any = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits += s[i++];
        any = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            --exponent;
            any = true;
        }
    }
    if (!any) throw std::invalid_argument("bad rational literal: " + s);
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(s.substr(i), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rational literal: " + s);
        }
        i += used;
        exponent += e;
    }
    if (i != s.size()) throw std::invalid_argument("bad rational literal: " + s);
    mpz_class mant(digits, 10);
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational q = exponent >= 0 ? Rational(mant * ten_pow) : Rational(mant, ten_pow);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

}  // namespace nncone
