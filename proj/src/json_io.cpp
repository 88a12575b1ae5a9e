#include "nncone/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace nncone {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double finite_number(const Json& j) {
    if (!j.is_number()) throw std::invalid_argument("expected a number, got " + j.dump());
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite number");
    return v;
}

std::string source_name(WitnessSource s) {
    switch (s) {
        case WitnessSource::ExactHalfline: return "exact_halfline";
        case WitnessSource::ScalarLift: return "scalar_lift";
        case WitnessSource::Search: return "search";
    }
    return "?";
}

std::string condition_name(ConditionKind k) {
    switch (k) {
        case ConditionKind::LowBlock: return "low_block";
        case ConditionKind::HighBlock: return "high_block";
        case ConditionKind::HalfLine: return "half_line";
    }
    return "?";
}

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
    Polynomial p;
    from_json(j, p);
    return p;
}

SquareMatrix parse_matrix(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed matrix JSON: ") + e.what());
    }
    SquareMatrix m;
    from_json(j, m);
    return m;
}

void to_json(Json& j, const Polynomial& p) {
    j = Json::array();
    for (double c : p.coeffs()) j.push_back(c);
}

void from_json(const Json& j, Polynomial& p) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("polynomial must be a nonempty JSON array");
    std::vector<double> c;
    for (const auto& x : j) c.push_back(finite_number(x));
    p = Polynomial(std::move(c));
}

void to_json(Json& j, const SquareMatrix& m) {
    j = m.rows();
}

void from_json(const Json& j, SquareMatrix& m) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
    std::vector<std::vector<double>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
        std::vector<double> r;
        for (const auto& x : row) r.push_back(finite_number(x));
        rows.push_back(std::move(r));
    }
    m = SquareMatrix::from_rows(rows);
}

void to_json(Json& j, const RationalPolynomial& p) {
    j = Json::array();
    for (const auto& q : p.coeffs()) j.push_back(to_string(q));
    if (p.is_zero()) j.push_back("0");
}

void from_json(const Json& j, RationalPolynomial& p) {
    if (!j.is_array()) throw std::invalid_argument("rational polynomial must be an array");
    std::vector<Rational> c;
    for (const auto& x : j) {
        if (x.is_string()) {
            c.push_back(parse_rational(x.get<std::string>()));
        } else {
            c.emplace_back(finite_number(x));
        }
    }
    p = RationalPolynomial(std::move(c));
}

void to_json(Json& j, const SearchConfig& c) {
    j = Json{{"restarts", c.restarts},
             {"max_iters", c.max_iters},
             {"rho_log_range", {c.rho_log_lo, c.rho_log_hi}},
             {"concentrations", c.concentrations},
             {"confirm_tol", c.confirm_tol},
             {"seed", c.seed},
             {"threads", c.threads}};
}

void from_json(const Json& j, SearchConfig& c) {
    c = SearchConfig{};
    c.restarts = j.value("restarts", c.restarts);
    c.max_iters = j.value("max_iters", c.max_iters);
    if (j.contains("rho_log_range")) {
        c.rho_log_lo = j.at("rho_log_range").at(0).get<double>();
        c.rho_log_hi = j.at("rho_log_range").at(1).get<double>();
    }
    c.concentrations = j.value("concentrations", c.concentrations);
    c.confirm_tol = j.value("confirm_tol", c.confirm_tol);
    c.seed = j.value("seed", c.seed);
    c.threads = j.value("threads", c.threads);
    c.validate();
}

void to_json(Json& j, const Witness& w) {
    j = Json{{"s", w.s}, {"rho", w.rho}, {"i", w.i}, {"j", w.j}, {"value", w.value}};
}

void from_json(const Json& j, Witness& w) {
    w.s = j.at("s").get<SquareMatrix>();
    w.rho = j.at("rho").get<double>();
    w.i = j.at("i").get<std::size_t>();
    w.j = j.at("j").get<std::size_t>();
    w.value = j.at("value").get<double>();
}

Json verdict_json(const Verdict& v, const SearchConfig& cfg) {
    Json j = std::visit(overloaded{
                            [](const Refuted& r) {
                                return Json{{"verdict", "Refuted"},
                                            {"witness", r.witness},
                                            {"source", source_name(r.source)},
                                            {"restart", r.restart}};
                            },
                            [](const NoRefutationFound& r) {
                                return Json{{"verdict", "NoRefutationFound"},
                                            {"restarts_used", r.restarts_used},
                                            {"best_objective", r.best_objective}};
                            },
                            [](const ExactMember&) { return Json{{"verdict", "ExactMember"}}; },
                        },
                        v);
    j["config"] = cfg;
    return j;
}

void to_json(Json& j, const FamilySpec& f) {
    std::visit(overloaded{
                   [&](const LoewyGeneral& x) {
                       j = Json{{"family", "loewy"}, {"n", x.n}, {"m", x.m}, {"s", x.s}, {"t", x.t}};
                   },
                   [&](const Alpha& x) { j = Json{{"family", "alpha"}, {"n", x.n}, {"alpha", x.alpha}}; },
                   [&](const ConjectureGap& x) {
                       j = Json{{"family", "conjecture"}, {"n", x.n}, {"m", x.m}, {"s", x.s}, {"t", x.t}};
                   },
               },
               f);
}

void from_json(const Json& j, FamilySpec& f) {
    const auto name = j.at("family").get<std::string>();
    if (name == "loewy") {
        f = LoewyGeneral{j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>(), j.at("s").get<std::size_t>(),
                         j.at("t").get<double>()};
    } else if (name == "alpha") {
        f = Alpha{j.at("n").get<std::size_t>(), j.at("alpha").get<double>()};
    } else if (name == "conjecture") {
        f = ConjectureGap{j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>(), j.at("s").get<std::size_t>(),
                          j.at("t").get<double>()};
    } else {
        throw std::invalid_argument("unknown family: " + name);
    }
}

void to_json(Json& j, const StochasticDecomposition& d) {
    j = Json{{"rho", d.rho}, {"s", d.s}, {"d", d.d}};
}

void to_json(Json& j, const SosDecomposition& d) {
    j = Json{{"f1", d.f1}, {"f2", d.f2}, {"g1", d.g1}, {"g2", d.g2}, {"residual", d.residual}};
}

void to_json(Json& j, const VolumeEstimate& e) {
    j = Json{{"target", e.target},     {"n", e.n},
             {"k", e.k},               {"dim", e.dim},
             {"n_samples", e.n_samples}, {"n_inside", e.n_inside},
             {"n_refuted", e.n_refuted}, {"fraction", e.fraction},
             {"ci_low", e.ci_low},     {"ci_high", e.ci_high},
             {"z", e.z},               {"bias", to_string(e.bias)},
             {"config", e.cfg},        {"seed", e.seed}};
    if (e.target == "projection") j["c_cap"] = e.c_cap;
}

void to_json(Json& j, const CompareReport& r) {
    j = Json{{"kind", to_string(r.kind)},
             {"params", {{"n", r.params.n}, {"n2", r.params.n2}, {"k", r.params.k}, {"ks", r.params.ks},
                         {"c_cap", r.params.c_cap}}},
             {"estimates", r.estimates},
             {"predicted", r.predicted},
             {"separated", r.separated},
             {"status", to_string(r.status)},
             {"samples", r.samples},
             {"sample_cap", r.sample_cap}};
}

void to_json(Json& j, const MaxTResult& r) {
    Json trace = Json::array();
    for (const auto& s : r.trace) trace.push_back({{"t", s.t}, {"refuted", s.refuted}});
    j = Json{{"lo", r.lo}, {"hi", r.hi}, {"trace", trace}};
}

void to_json(Json& j, const SliceTrace& s) {
    Json pts = Json::array();
    for (const auto& p : s.points) {
        pts.push_back({{"t", p.t}, {"mu", p.mu ? Json(*p.mu) : Json(nullptr)}});
    }
    j = Json{{"points", pts}, {"residual", s.residual}};
}

void to_json(Json& j, const Violation& v) {
    j = Json{{"kind", condition_name(v.kind)}, {"degree", v.degree ? Json(*v.degree) : Json(nullptr)}};
}

}  // namespace nncone
