// Command-line front end for the qaw library.
//
// Four commands share one flag vocabulary:
//   eval   <target>  -- polynomials, q-shifted factorials, basic series
//   kernel <name>    -- bilinear Poisson-type kernels, scalar or theta/phi grid
//   check  <id>      -- run the registry checks whose id contains <id>
//   suite            -- run the full verification registry
//
// Output is JSON (default) or CSV; numbers are printed with 17 significant
// digits so every double round-trips exactly.  Exit codes: 0 success,
// 1 at least one identity check failed, 2 usage or parameter-domain error.
// Errors go to stderr as one line: "ERROR <code> <violated invariant>".

#include <qaw/qaw.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace {

using qaw::cplx;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch; break;
        }
    }
    return out;
}

std::string json_complex(const cplx& z) {
    return "{\"re\":" + fmt17(z.real()) + ",\"im\":" + fmt17(z.imag()) + "}";
}

// All parsed command-line state.  Lists stay as vectors; scalar accessors
// below apply the documented resolution rules (e.g. theta wins over x).
struct CliOptions {
    std::string command;
    std::string target;
    std::vector<std::string> bindings;  // positional key=value pairs

    double q = 0.5;
    std::vector<double> lambda{0.4, 0.3, 0.2, 0.1};
    std::vector<double> mu;      // empty: per-command default
    std::vector<double> t{0.3};  // re[,im]
    std::vector<double> theta;   // list enables grid mode
    std::vector<double> phi;
    double x = 0.0;
    double y = 0.0;
    bool have_x = false, have_y = false;
    long n = 0;
    long m = 0;
    long terms = 200;  // cap for direct-summation oracles
    double alpha_exp = 0.5;  // q-Laguerre exponent
    std::vector<double> a_param{0.2};  // re[,im] for q-shifted factorial targets
    std::vector<double> z_param{0.5};  // re[,im] series argument
    std::vector<double> num_list;      // explicit phi numerator parameters
    std::vector<double> den_list;      // explicit phi denominator parameters
    std::string format = "json";
    unsigned long long seed = 42;
    long samples = 20;
    std::string only;
    std::vector<std::string> tol_raw;  // id=value pairs
};

cplx to_cplx(const std::vector<double>& v, const char* what) {
    if (v.empty() || v.size() > 2)
        qaw::fail(qaw::ErrorCode::InvalidParameter,
                  std::string(what) + " takes re or re,im");
    return {v[0], v.size() == 2 ? v[1] : 0.0};
}

// Angle wins over abscissa when both are present; otherwise fall back to the
// default angle so every kernel has a concrete evaluation point.
double resolve_x(const CliOptions& o) {
    if (!o.theta.empty()) return std::cos(o.theta[0]);
    if (o.have_x) return o.x;
    return std::cos(1.0);
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& raw) {
    std::map<std::string, double> out;
    for (const std::string& item : raw) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      "--tol expects id=value, got '" + item + "'");
        try {
            out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      "--tol value is not a number in '" + item + "'");
        }
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - pos);
        if (!tok.empty()) {
            try {
                out.push_back(std::stod(tok));
            } catch (const std::exception&) {
                qaw::fail(qaw::ErrorCode::InvalidParameter,
                          std::string(what) + ": '" + tok + "' is not a number");
            }
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// Positional key=value bindings fill any option the user did not pass as a
// flag, so "eval aw_poly n=3 theta=0.9" works without dashes.
void apply_bindings(CliOptions& o, const CLI::App& app) {
    for (const std::string& b : o.bindings) {
        auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0)
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      "positional binding must be key=value, got '" + b + "'");
        const std::string key = b.substr(0, eq);
        const std::string val = b.substr(eq + 1);
        auto flag_given = [&](const std::string& name) {
            const CLI::Option* opt = app.get_option_no_throw("--" + name);
            return opt != nullptr && opt->count() > 0;
        };
        if (flag_given(key)) continue;  // flags beat positional bindings
        try {
            if (key == "q") o.q = std::stod(val);
            else if (key == "lambda") o.lambda = parse_double_list(val, "lambda");
            else if (key == "mu") o.mu = parse_double_list(val, "mu");
            else if (key == "t") o.t = parse_double_list(val, "t");
            else if (key == "theta") o.theta = parse_double_list(val, "theta");
            else if (key == "phi") o.phi = parse_double_list(val, "phi");
            else if (key == "x") { o.x = std::stod(val); o.have_x = true; }
            else if (key == "y") { o.y = std::stod(val); o.have_y = true; }
            else if (key == "n") o.n = std::stol(val);
            else if (key == "m") o.m = std::stol(val);
            else if (key == "terms") o.terms = std::stol(val);
            else if (key == "alpha") o.alpha_exp = std::stod(val);
            else if (key == "a") o.a_param = parse_double_list(val, "a");
            else if (key == "z") o.z_param = parse_double_list(val, "z");
            else if (key == "num") o.num_list = parse_double_list(val, "num");
            else if (key == "den") o.den_list = parse_double_list(val, "den");
            else if (key == "format") o.format = val;
            else if (key == "seed") o.seed = std::stoull(val);
            else if (key == "samples") o.samples = std::stol(val);
            else if (key == "only") o.only = val;
            else if (key == "tol") o.tol_raw.push_back(val);
            else
                qaw::fail(qaw::ErrorCode::InvalidParameter,
                          "unknown binding key '" + key + "'");
        } catch (const qaw::Error&) {
            throw;
        } catch (const std::exception&) {
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      "binding '" + b + "' has a malformed value");
        }
    }
}

// ---------------------------------------------------------------------------
// eval

struct EvalResult {
    cplx value{0.0, 0.0};
    long terms_used = 0;
    double tail_estimate = 0.0;
};

EvalResult run_eval_target(const CliOptions& o) {
    qaw::QBase qb(o.q);
    const double xv = resolve_x(o);
    const double th = o.theta.empty() ? std::acos(xv) : o.theta[0];
    auto from_series = [](const qaw::SeriesValue& sv) {
        return EvalResult{sv.value, sv.terms_used, sv.tail_estimate};
    };
    auto finite = [](cplx v, long terms) { return EvalResult{v, terms, 0.0}; };

    const std::string& tgt = o.target;
    if (tgt == "aw_poly") {
        qaw::ParamSet lam(o.lambda, qb);
        return finite(qaw::aw_poly(o.n, xv, lam), o.n + 1);
    }
    if (tgt == "aw_weight") {
        qaw::ParamSet lam(o.lambda, qb);
        return finite(cplx(qaw::aw_weight(xv, lam), 0.0), 0);
    }
    if (tgt == "aw_h0") {
        qaw::ParamSet lam(o.lambda, qb);
        return finite(cplx(qaw::aw_h0(lam), 0.0), 0);
    }
    if (tgt == "aw_norm") {
        qaw::ParamSet lam(o.lambda, qb);
        return finite(cplx(qaw::aw_norm(o.n, lam), 0.0), o.n);
    }
    if (tgt == "qpoch_n")
        return finite(qaw::qpoch_n(to_cplx(o.a_param, "a"), qb, o.n), o.n);
    if (tgt == "qpoch_inf")
        return from_series(qaw::qpoch_inf(to_cplx(o.a_param, "a"), qb));
    if (tgt == "h")
        return from_series(qaw::h_factor(xv, to_cplx(o.a_param, "a"), qb));
    if (tgt == "phi") {
        qaw::PhiSpec spec;
        spec.q = o.q;
        if (!o.num_list.empty() || !o.den_list.empty()) {
            for (double v : o.num_list) spec.numerator.push_back(cplx(v, 0.0));
            for (double v : o.den_list) spec.denominator.push_back(cplx(v, 0.0));
            spec.z = to_cplx(o.z_param, "z");
        } else {
            // Default: the terminating 4phi3 that represents the degree-n
            // polynomial at angle theta for the current parameter vector.
            qaw::ParamSet lam(o.lambda, qb);
            const double a = lam.a();
            const cplx eit = std::polar(1.0, th);
            spec.numerator = {cplx(std::pow(o.q, -static_cast<double>(o.n)), 0.0),
                              cplx(lam.abcd() * std::pow(o.q, o.n - 1.0), 0.0),
                              a * eit, a / eit};
            spec.denominator = {cplx(lam.a() * lam.b(), 0.0),
                                cplx(lam.a() * lam.c(), 0.0),
                                cplx(lam.a() * lam.d(), 0.0)};
            spec.z = cplx(o.q, 0.0);
        }
        return from_series(qaw::eval_phi(spec));
    }
    if (tgt == "W") {
        std::vector<cplx> bs;
        for (double v : o.num_list) bs.push_back(cplx(v, 0.0));
        if (bs.empty()) bs = {cplx(0.3, 0.0), cplx(0.4, 0.0)};
        return from_series(qaw::eval_W(to_cplx(o.a_param, "a"), bs,
                                       to_cplx(o.z_param, "z"), qb));
    }
    if (tgt == "qhermite")
        return finite(cplx(qaw::cont_qhermite(o.n, xv, qb), 0.0), o.n / 2 + 1);
    if (tgt == "big_qhermite") {
        if (o.lambda.empty())
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      "big_qhermite needs lambda with at least one entry");
        return finite(qaw::big_qhermite(o.n, xv, o.lambda[0], qb), o.n + 1);
    }
    if (tgt == "dual_qhahn") {
        if (o.lambda.size() < 3)
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      "dual_qhahn needs lambda a,b,c");
        return finite(qaw::dual_qhahn(o.n, xv, o.lambda[0], o.lambda[1],
                                      o.lambda[2], qb),
                      o.n + 1);
    }
    if (tgt == "asc") {
        if (o.lambda.size() < 2)
            qaw::fail(qaw::ErrorCode::InvalidParameter, "asc needs lambda a,b");
        return finite(qaw::alsalam_chihara(o.n, xv, o.lambda[0], o.lambda[1], qb),
                      o.n + 1);
    }
    if (tgt == "q_laguerre")
        return finite(qaw::q_laguerre(o.n, xv, o.alpha_exp, qb), o.n + 1);
    if (tgt == "q_wavefunction")
        return finite(cplx(qaw::q_wavefunction(o.n, xv, qb), 0.0), o.n + 1);
    if (tgt == "hermite_psi")
        return finite(cplx(qaw::hermite_psi(o.n, o.have_x ? o.x : xv), 0.0),
                      o.n + 1);
    qaw::fail(qaw::ErrorCode::InvalidParameter,
              "unknown eval target '" + tgt +
                  "' (known: aw_poly aw_weight aw_h0 aw_norm qpoch_n qpoch_inf "
                  "h phi W qhermite big_qhermite dual_qhahn asc q_laguerre "
                  "q_wavefunction hermite_psi)");
}

int cmd_eval(const CliOptions& o) {
    if (o.target.empty())
        qaw::fail(qaw::ErrorCode::InvalidParameter, "eval requires a target name");
    EvalResult r = run_eval_target(o);
    if (o.format == "csv") {
        std::printf("target,re,im,terms_used,tail_estimate\n");
        std::printf("%s,%s,%s,%ld,%s\n", o.target.c_str(),
                    fmt17(r.value.real()).c_str(), fmt17(r.value.imag()).c_str(),
                    r.terms_used, fmt17(r.tail_estimate).c_str());
    } else {
        std::printf("{\"target\":\"%s\",\"value\":%s,\"terms_used\":%ld,"
                    "\"tail_estimate\":%s}\n",
                    json_escape(o.target).c_str(), json_complex(r.value).c_str(),
                    r.terms_used, fmt17(r.tail_estimate).c_str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// kernel

const std::set<std::string>& kernel_names() {
    static const std::set<std::string> names{
        "direct", "explicit", "unity",  "mehler", "qhermite",
        "dual_qhahn", "asc",  "bigqh",  "qbessel"};
    return names;
}

// Kernels below the full four-parameter family use raw coefficients with
// their own compatibility constraints; these defaults satisfy them for the
// standard lambda so a bare "kernel asc" run works out of the box.
std::vector<double> default_mu_for(const std::string& kernel,
                                   const std::vector<double>& lambda) {
    if (kernel == "dual_qhahn") {
        if (lambda.size() < 3)
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      "dual_qhahn needs lambda a,b,c");
        const double ga = 0.25;
        return {lambda[0] * lambda[2] / ga, 0.2, ga};
    }
    if (kernel == "asc") {
        if (lambda.size() < 2)
            qaw::fail(qaw::ErrorCode::InvalidParameter, "asc needs lambda a,b");
        const double al = 0.32;
        return {al, lambda[0] * lambda[1] / al};
    }
    if (kernel == "bigqh" || kernel == "qbessel") return {0.32};
    return {};  // full-family kernels build MuParams instead
}

qaw::KernelValue eval_kernel_point(const CliOptions& o, double th, double ph) {
    qaw::QBase qb(o.q);
    const cplx t = to_cplx(o.t, "t");
    const std::string& k = o.target;
    const double xv = std::cos(th), yv = std::cos(ph);
    qaw::KernelValue out;

    if (k == "direct" || k == "explicit" || k == "unity") {
        qaw::ParamSet lam(o.lambda, qb);
        if (k == "unity") {
            qaw::MuParams mu = o.mu.empty()
                                   ? qaw::standard_mu_unity(lam)
                                   : qaw::MuParams(lam, o.mu, true);
            out.value = qaw::kernel_unity(xv, yv, lam, mu);
            return out;
        }
        qaw::MuParams mu = o.mu.empty() ? qaw::standard_mu(lam)
                                        : qaw::MuParams(lam, o.mu, false);
        qaw::KernelParams kp(lam, mu, t);
        if (k == "direct") {
            out.value = qaw::kernel_direct(xv, yv, kp, o.terms).value;
            return out;
        }
        return qaw::kernel_explicit(xv, yv, kp);
    }

    if (k == "mehler" || k == "qhermite") {
        if (t.imag() != 0.0)
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      k + " requires a real t");
        const double xr = o.theta.empty() && o.have_x ? o.x : xv;
        const double yr = o.phi.empty() && o.have_y ? o.y : yv;
        if (k == "mehler") {
            out.value = cplx(qaw::mehler_kernel(xr, yr, t.real()), 0.0);
        } else {
            if (!(std::abs(t.real()) < 1.0))
                qaw::fail(qaw::ErrorCode::InvalidParameter,
                          "qhermite kernel requires |t| < 1");
            out.value = cplx(qaw::qhermite_poisson(xr, yr, t.real(), qb), 0.0);
        }
        return out;
    }

    // Lower kernels: validate magnitudes through ParamSet, then hand the raw
    // coefficients to the closed forms (each enforces its own product rule).
    std::vector<double> mu = o.mu.empty() ? default_mu_for(k, o.lambda) : o.mu;
    qaw::ParamSet mu_check(mu, qb);
    (void)mu_check;
    if (!(std::abs(t) < 1.0))
        qaw::fail(qaw::ErrorCode::InvalidParameter, "kernel requires |t| < 1");
    if (k == "dual_qhahn") {
        qaw::ParamSet lam({o.lambda[0], o.lambda[1], o.lambda[2]}, qb);
        (void)lam;
        if (mu.size() < 3)
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      "dual_qhahn needs mu alpha,beta,gamma");
        out.value = qaw::dual_qhahn_kernel(xv, yv, o.lambda[0], o.lambda[1],
                                           o.lambda[2], mu[0], mu[1], mu[2], t,
                                           qb);
        return out;
    }
    if (k == "asc") {
        qaw::ParamSet lam({o.lambda[0], o.lambda[1]}, qb);
        (void)lam;
        if (mu.size() < 2)
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      "asc needs mu alpha,beta");
        out.value = qaw::asc_kernel(xv, yv, o.lambda[0], o.lambda[1], mu[0],
                                    mu[1], t, qb);
        return out;
    }
    if (k == "bigqh") {
        if (o.lambda.empty() || mu.empty())
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      "bigqh needs lambda a and mu alpha");
        qaw::ParamSet lam({o.lambda[0]}, qb);
        (void)lam;
        out.value = qaw::bigqh_kernel(xv, yv, o.lambda[0], mu[0], t, qb);
        return out;
    }
    if (k == "qbessel") {
        if (mu.empty())
            qaw::fail(qaw::ErrorCode::InvalidParameter, "qbessel needs mu alpha");
        out.value = qaw::qhermite_qbessel_kernel(xv, yv, mu[0], t, qb);
        return out;
    }
    qaw::fail(qaw::ErrorCode::InvalidParameter,
              "unknown kernel '" + k + "'");
}

int cmd_kernel(const CliOptions& o) {
    if (o.target.empty() || kernel_names().count(o.target) == 0)
        qaw::fail(qaw::ErrorCode::InvalidParameter,
                  "kernel requires one of: direct explicit unity mehler "
                  "qhermite dual_qhahn asc bigqh qbessel");
    std::vector<double> thetas =
        o.theta.empty()
            ? std::vector<double>{o.have_x ? std::acos(o.x) : 1.0}
            : o.theta;
    std::vector<double> phis =
        o.phi.empty() ? std::vector<double>{o.have_y ? std::acos(o.y) : 1.3}
                      : o.phi;
    const bool grid = thetas.size() > 1 || phis.size() > 1;

    if (grid || o.format == "csv") {
        std::printf("theta,phi,re,im\n");
        for (double th : thetas)
            for (double ph : phis) {
                qaw::KernelValue v = eval_kernel_point(o, th, ph);
                std::printf("%s,%s,%s,%s\n", fmt17(th).c_str(),
                            fmt17(ph).c_str(), fmt17(v.value.real()).c_str(),
                            fmt17(v.value.imag()).c_str());
            }
        return 0;
    }

    const double th = thetas[0], ph = phis[0];
    qaw::KernelValue v = eval_kernel_point(o, th, ph);
    const cplx t = to_cplx(o.t, "t");
    std::string parts;
    if (v.has_parts) {
        parts = ",\"parts\":[";
        for (int i = 0; i < 3; ++i)
            parts += (i ? "," : "") + json_complex(v.parts[i]);
        parts += "],\"part_terms\":[";
        for (int i = 0; i < 3; ++i)
            parts += (i ? "," : "") + std::to_string(v.part_terms[i]);
        parts += "]";
    }
    std::printf("{\"kernel\":\"%s\",\"theta\":%s,\"phi\":%s,\"t\":%s,"
                "\"value\":%s%s}\n",
                json_escape(o.target).c_str(), fmt17(th).c_str(),
                fmt17(ph).c_str(), json_complex(t).c_str(),
                json_complex(v.value).c_str(), parts.c_str());
    return 0;
}

// ---------------------------------------------------------------------------
// check / suite

void emit_reports(const std::vector<qaw::CheckReport>& reports,
                  const std::string& format) {
    if (format == "csv") {
        std::printf("identity_id,observed_error,tolerance,passed\n");
        for (const auto& r : reports)
            std::printf("%s,%s,%s,%s\n", r.identity_id.c_str(),
                        fmt17(r.observed_error).c_str(),
                        fmt17(r.tolerance).c_str(), r.passed ? "true" : "false");
        return;
    }
    std::printf("[");
    bool first = true;
    for (const auto& r : reports) {
        std::printf("%s\n  {\"identity_id\":\"%s\",\"observed_error\":%s,"
                    "\"tolerance\":%s,\"passed\":%s,\"witness\":{",
                    first ? "" : ",", json_escape(r.identity_id).c_str(),
                    fmt17(r.observed_error).c_str(), fmt17(r.tolerance).c_str(),
                    r.passed ? "true" : "false");
        bool wfirst = true;
        for (const auto& [k, val] : r.witness) {
            std::printf("%s\"%s\":\"%s\"", wfirst ? "" : ",",
                        json_escape(k).c_str(), json_escape(val).c_str());
            wfirst = false;
        }
        std::printf("}}");
        first = false;
    }
    std::printf("%s]\n", reports.empty() ? "" : "\n");
}

int cmd_suite(const CliOptions& o, bool single_check) {
    qaw::SuiteConfig cfg;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.only = single_check ? o.target : o.only;
    cfg.tol_overrides = parse_tols(o.tol_raw);
    if (single_check && cfg.only.empty())
        qaw::fail(qaw::ErrorCode::InvalidParameter,
                  "check requires an identity id (or substring)");
    std::vector<qaw::CheckReport> reports = qaw::run_suite(cfg);
    if (single_check && reports.empty())
        qaw::fail(qaw::ErrorCode::InvalidParameter,
                  "no registered check matches '" + cfg.only + "'");
    emit_reports(reports, o.format);
    for (const auto& r : reports)
        if (!r.passed) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CliOptions o;
    CLI::App app{
        "Askey-Wilson family polynomial and Poisson-kernel calculator"};
    app.set_config("--config", "", "optional key=value parameter file");
    app.add_option("command,--command", o.command,
                   "eval | kernel | check | suite")
        ->check(CLI::IsMember({"eval", "kernel", "check", "suite"}));
    app.add_option("target,--target", o.target,
                   "eval target, kernel name, or check id");
    app.add_option("bindings", o.bindings, "extra key=value parameter bindings");
    app.add_option("--q", o.q, "base q in (0,1)");
    app.add_option("--lambda", o.lambda, "row parameters a,b,c,d")
        ->delimiter(',');
    app.add_option("--mu", o.mu, "column parameters alpha,beta,gamma,delta")
        ->delimiter(',');
    app.add_option("--t", o.t, "kernel argument re[,im]")->delimiter(',');
    app.add_option("--theta", o.theta, "first angle(s), radians; list = grid")
        ->delimiter(',');
    app.add_option("--phi", o.phi, "second angle(s), radians; list = grid")
        ->delimiter(',');
    auto* xopt = app.add_option("--x", o.x, "first abscissa (theta wins)");
    auto* yopt = app.add_option("--y", o.y, "second abscissa (phi wins)");
    app.add_option("--n", o.n, "primary degree");
    app.add_option("--m", o.m, "secondary degree");
    app.add_option("--terms", o.terms, "series cap for direct oracles");
    app.add_option("--alpha", o.alpha_exp, "q-Laguerre exponent");
    app.add_option("--a", o.a_param, "factorial-base argument re[,im]")
        ->delimiter(',');
    app.add_option("--z", o.z_param, "series argument re[,im]")->delimiter(',');
    app.add_option("--num", o.num_list, "phi numerator parameters")
        ->delimiter(',');
    app.add_option("--den", o.den_list, "phi denominator parameters")
        ->delimiter(',');
    app.add_option("--format", o.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", o.seed, "suite sampling seed");
    app.add_option("--samples", o.samples, "draws per sampled identity");
    app.add_option("--only", o.only, "suite filter: run ids containing this");
    app.add_option("--tol", o.tol_raw, "tolerance override id=value")
        ->allow_extra_args(false);

    try {
        app.parse(argc, argv);
        o.have_x = xopt->count() > 0;
        o.have_y = yopt->count() > 0;
        apply_bindings(o, app);
        if (o.command.empty())
            qaw::fail(qaw::ErrorCode::InvalidParameter,
                      "missing command: eval | kernel | check | suite");
        if (o.command == "eval") return cmd_eval(o);
        if (o.command == "kernel") return cmd_kernel(o);
        if (o.command == "check") return cmd_suite(o, true);
        return cmd_suite(o, false);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "ERROR InvalidParameter %s\n", e.what());
        return 2;
    } catch (const qaw::Error& e) {
        std::fprintf(stderr, "ERROR %s %s\n", e.code_name(), e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "ERROR InvalidParameter %s\n", e.what());
        return 2;
    }
}
