#include "nncone/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "nncone/errors.hpp"
#include "nncone/families.hpp"
#include "nncone/membership.hpp"
#include "nncone/perron.hpp"
#include "nncone/sos.hpp"
#include "nncone/volume.hpp"

namespace nncone {

namespace {

Json check(const Json& run, const SearchConfig& cfg) {
    const auto p = run.at("poly").get<Polynomial>();
    const auto n = run.at("n").get<std::size_t>();
    if (n == 0) throw std::invalid_argument("n must be at least 1");
    Json out = verdict_json(refute(p, n, cfg), cfg);
    out["necessary_conditions"] = p.is_zero() ? Json::array() : Json(necessary_conditions(p, n));
    return out;
}

Json maxt(const Json& run, const SearchConfig& cfg) {
    const auto spec = run.at("family").get<FamilySpec>();
    validate(spec);
    return max_t(spec, cfg, run.value("t_hi", 4.0), run.value("width", 0.01));
}

Json volume(const Json& run, const SearchConfig& cfg) {
    const auto n = run.at("n").get<std::size_t>();
    const auto k = run.at("k").get<std::size_t>();
    const auto samples = run.at("samples").get<std::size_t>();
    const double z = run.value("z", 3.0);
    const auto target = run.value("target", std::string("cone"));
    if (n == 0 || samples == 0) throw std::invalid_argument("n and samples must be positive");
    if (target == "cone") return estimate_cone_fraction(n, k, samples, cfg, z);
    if (target == "projection") {
        if (k < 2 * n) throw std::invalid_argument("projection needs k >= 2n");
        return estimate_projection_fraction(n, k, samples, cfg, run.value("c_cap", 10.0), z);
    }
    throw std::invalid_argument("unknown volume target: " + target);
}

Json compare(const Json& run, const SearchConfig& cfg) {
    CompareParams params;
    params.n = run.value("n", params.n);
    params.n2 = run.value("n2", params.n2);
    params.k = run.value("k", params.k);
    params.ks = run.value("ks", params.ks);
    params.c_cap = run.value("c_cap", params.c_cap);
    const auto kind = parse_compare_kind(run.at("kind").get<std::string>());
    const auto samples = run.at("samples").get<std::size_t>();
    const auto cap = run.value("sample_cap", samples);
    if (samples == 0 || cap < samples) throw std::invalid_argument("need 0 < samples <= sample_cap");
    if (kind == CompareKind::Trend && params.ks.empty()) throw std::invalid_argument("trend needs ks");
    return compare_experiment(kind, params, samples, cfg, cap, run.value("z", 3.0));
}

Json slice(const Json& run, const SearchConfig& cfg) {
    return trace_slice(run.at("p").get<Polynomial>(), run.at("q").get<Polynomial>(), run.at("u").get<Polynomial>(),
                       run.at("n").get<std::size_t>(), run.at("grid").get<std::size_t>(), cfg,
                       run.value("mu_hi", 2.0));
}

Json family(const Json& run) {
    const auto spec = run.at("family").get<FamilySpec>();
    return build(spec);
}

Json decompose(const Json& run) { return polya_szego_decompose(run.at("poly").get<Polynomial>()); }

Json normalize(const Json& run) {
    const auto d = perron_normalize(run.at("matrix").get<SquareMatrix>());
    Json out = d;
    out["row_sum_error"] = row_sum_error(d.s);
    out["reconstruction_error"] = relative_error(d.reconstruct(), run.at("matrix").get<SquareMatrix>());
    return out;
}

}  // namespace

Json run_command(const Json& run) {
    const auto command = run.at("command").get<std::string>();
    SearchConfig cfg = run.contains("config") ? run.at("config").get<SearchConfig>() : SearchConfig{};
    cfg.validate();

    Json result;
    if (command == "check") result = check(run, cfg);
    else if (command == "maxt") result = maxt(run, cfg);
    else if (command == "volume") result = volume(run, cfg);
    else if (command == "compare") result = compare(run, cfg);
    else if (command == "slice") result = slice(run, cfg);
    else if (command == "family") result = family(run);
    else if (command == "decompose") result = decompose(run);
    else if (command == "normalize") result = normalize(run);
    else throw std::invalid_argument("unknown command: " + command);

    Json echo = run;
    echo["config"] = cfg;
    return Json{{"run", echo}, {"result", result}};
}

namespace {

// Thread counts are scheduling only; they never change results.
void strip_threads(Json& j) {
    if (j.is_object()) {
        if (j.contains("config") && j["config"].is_object()) j["config"].erase("threads");
        for (auto& [key, value] : j.items()) strip_threads(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_threads(value);
    }
}

}  // namespace

ReplayOutcome replay(const Json& record) {
    ReplayOutcome out;
    out.rerun = run_command(record.at("run"));
    Json a = record.at("result"), b = out.rerun.at("result");
    strip_threads(a);
    strip_threads(b);
    out.identical = a == b;
    return out;
}

void write_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string());
        f << text;
        f.flush();
        if (!f) {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("cannot write " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot rename onto " + path);
    }
}

}  // namespace nncone
