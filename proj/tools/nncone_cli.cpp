#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "nncone/cli.hpp"
#include "nncone/errors.hpp"

using namespace nncone;

namespace {

enum Exit { Ok = 0, Negative = 1, InputError = 2, Failure = 3 };

struct InputFailure : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inline JSON when it looks like JSON, otherwise a path to a file holding it.
Json read_json_arg(const std::string& arg) {
    std::string text = arg;
    const auto first = arg.find_first_not_of(" \t\n");
    if (first == std::string::npos || (arg[first] != '[' && arg[first] != '{')) {
        std::ifstream f(arg);
        if (!f) throw InputFailure("cannot read " + arg);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputFailure(std::string("malformed JSON: ") + e.what());
    }
}

Json polynomial_arg(const std::string& arg) {
    const Json j = read_json_arg(arg);
    return parse_polynomial(j.dump());
}

std::string coefficient_list(const Polynomial& p) {
    std::string out = "[";
    char buf[32];
    for (std::size_t d = 0; d < p.size(); ++d) {
        if (d) out += ',';
        const auto res = std::to_chars(buf, buf + sizeof buf, p.coeff(d));
        out.append(buf, res.ptr);
    }
    return out + "]";
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("NONNEG_CONE_SEED")) {
        std::uint64_t v = 0;
        const std::string s(env);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            throw InputFailure("NONNEG_CONE_SEED is not an unsigned integer: " + s);
        return v;
    }
    return 0;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) std::cout << text << '\n';
    else write_atomic(path, text + '\n');
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Membership tests and experiments for polynomials preserving entrywise nonnegativity"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> threads, restarts, iters;
    std::optional<double> tol;
    std::string out;
    app.add_option("--seed", seed, "Search and sampling seed (default: $NONNEG_CONE_SEED, else 0)");
    app.add_option("--threads", threads, "Worker threads (0 = all cores)");
    app.add_option("--restarts", restarts, "Search restarts per membership test");
    app.add_option("--iters", iters, "Objective evaluations per restart");
    app.add_option("--tol", tol, "Witness confirmation tolerance");
    app.add_option("--out", out, "Write the JSON record here instead of stdout");

    Json run;

    // check
    auto* check = app.add_subcommand("check", "Try to refute membership of a polynomial in P_n");
    std::string poly_arg;
    std::size_t n = 2;
    check->add_option("poly", poly_arg, "Coefficients, lowest degree first (inline JSON or file)")->required();
    check->add_option("-n,--order", n, "Matrix order")->capture_default_str();

    // maxt
    auto* maxt = app.add_subcommand("maxt", "Bisect for the largest unrefuted family parameter");
    std::string fam = "loewy";
    std::size_t m = 1, s = 0;
    double t_hi = 4.0, width = 0.01;
    std::string trace_csv;
    maxt->add_option("--family", fam, "loewy or conjecture")->capture_default_str();
    maxt->add_option("-n,--order", n, "Matrix order")->capture_default_str();
    maxt->add_option("-m", m, "Position of the -t coefficient")->capture_default_str();
    maxt->add_option("-s", s, "Shift")->capture_default_str();
    maxt->add_option("--t-hi", t_hi, "Upper end of the bracket")->capture_default_str();
    maxt->add_option("--width", width, "Final bracket width")->capture_default_str();
    maxt->add_option("--trace-csv", trace_csv, "Write the bisection trace as CSV");

    // volume
    auto* volume = app.add_subcommand("volume", "Monte-Carlo ball fraction of P_{n,k}");
    std::size_t k = 2, samples = 100000;
    std::string target = "cone", csv;
    double c_cap = 10.0, z = 3.0;
    volume->add_option("-n,--order", n, "Matrix order")->capture_default_str();
    volume->add_option("-k,--degree", k, "Degree bound")->capture_default_str();
    volume->add_option("--samples", samples, "Ball samples")->capture_default_str();
    volume->add_option("--target", target, "cone or projection")->capture_default_str();
    volume->add_option("--c-cap", c_cap, "Top coefficient for projection membership")->capture_default_str();
    volume->add_option("--z", z, "Wilson interval width in standard deviations")->capture_default_str();
    volume->add_option("--csv", csv, "Write a CSV row");

    // compare
    auto* cmp = app.add_subcommand("compare", "Paired volume experiments");
    std::string kind;
    std::size_t n2 = 2, cap = 0;
    std::vector<std::size_t> ks;
    cmp->add_option("kind", kind, "order, projection, degree or trend")->required();
    cmp->add_option("-n,--order", n, "Matrix order")->capture_default_str();
    cmp->add_option("--n2", n2, "Second order (order comparison)")->capture_default_str();
    cmp->add_option("-k,--degree", k, "Degree bound")->capture_default_str();
    cmp->add_option("--ks", ks, "Degrees for the trend");
    cmp->add_option("--samples", samples, "Initial samples per estimate")->capture_default_str();
    cmp->add_option("--cap", cap, "Sample cap for escalation (default: no escalation)");
    cmp->add_option("--c-cap", c_cap, "Top coefficient for projection membership")->capture_default_str();
    cmp->add_option("--z", z, "Wilson interval width in standard deviations")->capture_default_str();
    cmp->add_option("--csv", csv, "Write one CSV row per estimate");

    // slice
    auto* slc = app.add_subcommand("slice", "Trace boundary offsets along (1-t)p + tq");
    std::string p_arg, q_arg, u_arg;
    std::size_t grid = 9;
    double mu_hi = 2.0;
    slc->add_option("--p", p_arg, "First endpoint")->required();
    slc->add_option("--q", q_arg, "Second endpoint")->required();
    slc->add_option("--u", u_arg, "Direction")->required();
    slc->add_option("-n,--order", n, "Matrix order")->capture_default_str();
    slc->add_option("--grid", grid, "Interior grid points")->capture_default_str();
    slc->add_option("--mu-hi", mu_hi, "Upper end of each bracket")->capture_default_str();

    // family
    auto* fml = app.add_subcommand("family", "Print a family member's coefficients");
    std::string fam_name;
    std::vector<std::string> fam_args;
    fml->add_option("name", fam_name, "loewy N M S T | alpha N ALPHA | conjecture N M S T")->required();
    fml->add_option("args", fam_args, "Family parameters")->required();

    auto* dec = app.add_subcommand("decompose", "f1^2 + f2^2 + x (g1^2 + g2^2) form of a member of P_1");
    dec->add_option("poly", poly_arg, "Coefficients (inline JSON or file)")->required();

    auto* nrm = app.add_subcommand("normalize", "Write a positive matrix as rho D S D^-1");
    std::string matrix_arg;
    nrm->add_option("matrix", matrix_arg, "Rows (inline JSON or file)")->required();

    auto* rep = app.add_subcommand("replay", "Rerun a saved record and compare results");
    std::string record_path;
    rep->add_option("record", record_path, "JSON record written by any command")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : InputError;
    }

    try {
        SearchConfig cfg;
        cfg.seed = resolve_seed(seed);
        if (threads) cfg.threads = *threads;
        if (restarts) cfg.restarts = *restarts;
        if (iters) cfg.max_iters = *iters;
        if (tol) cfg.confirm_tol = *tol;
        cfg.validate();

        if (rep->parsed()) {
            Json record = read_json_arg(record_path);
            if (threads) record["run"]["config"]["threads"] = *threads;
            const auto outcome = replay(record);
            emit(Json{{"identical", outcome.identical}, {"rerun", outcome.rerun}}.dump(2), out);
            std::cerr << (outcome.identical ? "replay: identical\n" : "replay: results differ\n");
            return outcome.identical ? Ok : Negative;
        }

        if (check->parsed()) {
            run = {{"command", "check"}, {"poly", polynomial_arg(poly_arg)}, {"n", n}};
        } else if (maxt->parsed()) {
            Json spec;
            if (fam == "loewy" || fam == "conjecture") spec = {{"family", fam}, {"n", n}, {"m", m}, {"s", s}, {"t", 0.0}};
            else throw InputFailure("maxt supports the loewy and conjecture families");
            run = {{"command", "maxt"}, {"family", spec}, {"t_hi", t_hi}, {"width", width}};
        } else if (volume->parsed()) {
            run = {{"command", "volume"}, {"n", n},         {"k", k}, {"samples", samples},
                   {"target", target},    {"c_cap", c_cap}, {"z", z}};
        } else if (cmp->parsed()) {
            run = {{"command", "compare"}, {"kind", kind},       {"n", n},
                   {"n2", n2},             {"k", k},             {"ks", ks},
                   {"samples", samples},   {"sample_cap", cap ? cap : samples},
                   {"c_cap", c_cap},       {"z", z}};
        } else if (slc->parsed()) {
            run = {{"command", "slice"},         {"p", polynomial_arg(p_arg)}, {"q", polynomial_arg(q_arg)},
                   {"u", polynomial_arg(u_arg)}, {"n", n},                     {"grid", grid},
                   {"mu_hi", mu_hi}};
        } else if (fml->parsed()) {
            auto num = [&](std::size_t i) {
                if (i >= fam_args.size()) throw InputFailure("missing parameter for family " + fam_name);
                return std::stod(fam_args[i]);
            };
            auto count = [&](std::size_t i) {
                const double v = num(i);
                if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v)))
                    throw InputFailure("expected a nonnegative integer, got " + fam_args[i]);
                return static_cast<std::size_t>(v);
            };
            Json spec;
            if (fam_name == "loewy" || fam_name == "conjecture") {
                if (fam_args.size() != 4) throw InputFailure(fam_name + " takes N M S T");
                spec = {{"family", fam_name}, {"n", count(0)}, {"m", count(1)}, {"s", count(2)}, {"t", num(3)}};
            } else if (fam_name == "alpha") {
                if (fam_args.size() != 2) throw InputFailure("alpha takes N ALPHA");
                spec = {{"family", "alpha"}, {"n", count(0)}, {"alpha", num(1)}};
            } else {
                throw InputFailure("unknown family: " + fam_name);
            }
            run = {{"command", "family"}, {"family", spec}};
        } else if (dec->parsed()) {
            run = {{"command", "decompose"}, {"poly", polynomial_arg(poly_arg)}};
        } else if (nrm->parsed()) {
            run = {{"command", "normalize"}, {"matrix", parse_matrix(read_json_arg(matrix_arg).dump())}};
        }
        run["config"] = cfg;

        const Json record = run_command(run);
        const Json& result = record.at("result");

        if (fml->parsed()) {
            std::cout << coefficient_list(result.get<Polynomial>()) << '\n';
            if (!out.empty()) write_atomic(out, record.dump(2) + '\n');
            return Ok;
        }
        if (maxt->parsed() && !trace_csv.empty()) {
            std::string text = "t,refuted\n";
            for (const auto& step : result.at("trace")) {
                std::ostringstream row;
                row.precision(17);
                row << step.at("t").get<double>() << ',' << (step.at("refuted").get<bool>() ? 1 : 0) << '\n';
                text += row.str();
            }
            write_atomic(trace_csv, text);
        }
        if ((volume->parsed() || cmp->parsed()) && !csv.empty()) {
            std::string text = csv_header() + '\n';
            auto add = [&](const Json& e) {
                VolumeEstimate v;
                v.k = e.at("k").get<std::size_t>();
                v.n = e.at("n").get<std::size_t>();
                v.n_samples = e.at("n_samples").get<std::size_t>();
                v.fraction = e.at("fraction").get<double>();
                v.ci_low = e.at("ci_low").get<double>();
                v.ci_high = e.at("ci_high").get<double>();
                v.bias = e.at("bias") == to_string(Bias::Exact) ? Bias::Exact : Bias::UpperBiased;
                v.seed = e.at("seed").get<std::uint64_t>();
                text += csv_row(v) + '\n';
            };
            if (volume->parsed()) add(result);
            else
                for (const auto& e : result.at("estimates")) add(e);
            write_atomic(csv, text);
        }
        emit(record.dump(2), out);

        if (check->parsed()) return result.at("verdict") == "Refuted" ? Negative : Ok;
        return Ok;
    } catch (const InputFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    } catch (const NonPositiveInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    } catch (const NotNonnegative& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << '\n';
        return Failure;
    }
}
