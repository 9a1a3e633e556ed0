// gammaq command-line front end: exact Taylor coefficients of Gamma at
// half-integer points, arbitrary-precision numerics elsewhere, and the
// identity/certificate verifiers. Exit codes: 0 success/pass, 1 verification
// failure, 2 pole (compute), 3 domain violation or bad input.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammaq/cache.hpp"
#include "gammaq/errors.hpp"
#include "gammaq/gamma_symbolic.hpp"
#include "gammaq/numeric.hpp"
#include "gammaq/rational.hpp"
#include "gammaq/reports.hpp"
#include "gammaq/sequences.hpp"
#include "gammaq/verifier.hpp"

namespace {

using namespace gammaq;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitPole = 2;
constexpr int kExitDomain = 3;

struct CommonOpts {
    std::string q;
    std::string format = "text";
    std::string cache;
    std::string out;
    long n = 4;
    long jmax = 10;
    long prec = 256;
    bool numeric = false;
};

int fail_domain(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitDomain;
}

std::optional<Rational> parse_q(const std::string& text) {
    auto r = Rational::parse(text);
    if (!r) {
        std::cerr << "error: --q must be an exact fraction like \"5/2\"";
        if (text.find('.') != std::string::npos)
            std::cerr << " (floats are ambiguous; write 1/2 instead of 0.5)";
        std::cerr << "; got \"" << text << "\"\n";
        return std::nullopt;
    }
    return r;
}

void emit(const Json& doc, const CommonOpts& o, const std::string& text_form) {
    const std::string payload = o.format == "json" ? doc.dump(2) + "\n" : text_form;
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "warning: cannot write " << o.out << "; printing to stdout\n";
            std::cout << payload;
            return;
        }
        f << payload;
    } else {
        std::cout << payload;
    }
}

int digits_for(long prec) { return std::max(6, static_cast<int>(prec * 0.30103)); }

int cmd_compute(const CommonOpts& o) {
    auto q = parse_q(o.q);
    if (!q) return kExitDomain;
    if (o.n < 0) return fail_domain("--n must be >= 0");
    const auto n_max = static_cast<std::size_t>(o.n);
    const auto half = HalfInteger::from_rational(*q);

    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "compute";
    doc["q"] = q->to_string();
    doc["n_max"] = n_max;
    std::string text;

    if (half) {
        if (half->is_nonpositive_integer()) {
            std::cerr << "error: Gamma has a pole at q = " << half->to_string() << "\n";
            return kExitPole;
        }
        doc["mode"] = "symbolic";
        const GammaTaylor gt = taylor(*half, n_max);
        Json values = Json::array();
        for (std::size_t n = 0; n <= n_max; ++n) {
            const ConstExpr d = derivative(gt, n);
            Json v;
            v["n"] = n;
            v["symbolic"] = d.to_string();
            v["terms"] = const_expr_json(d);
            text += "Gamma^(" + std::to_string(n) + ")(" + half->to_string() + ") = " + d.to_string();
            if (o.numeric) {
                const std::string dec = evaluate(d, o.prec).decimal(digits_for(o.prec));
                v["numeric"] = dec;
                text += " = " + dec;
            }
            text += "\n";
            values.push_back(std::move(v));
        }
        doc["values"] = std::move(values);
        emit(doc, o, text);
        return kExitPass;
    }

    if (!o.numeric)
        return fail_domain("q = " + q->to_string() +
                           " is not an integer or half-integer; symbolic output is only defined on "
                           "that lattice. Pass --numeric for a numeric expansion.");
    doc["mode"] = "numeric";
    doc["prec"] = o.prec;
    const NumericTaylor nt = gamma_taylor_numeric(*q, n_max, o.prec);
    Json values = Json::array();
    for (std::size_t n = 0; n <= n_max; ++n) {
        const BigFloat d = nt.coeffs[n].mul_rational(Rational(factorial(static_cast<unsigned>(n))));
        const std::string dec = d.decimal(digits_for(o.prec));
        values.push_back(Json{{"n", n}, {"numeric", dec}});
        text += "Gamma^(" + std::to_string(n) + ")(" + q->to_string() + ") = " + dec + "\n";
    }
    doc["values"] = std::move(values);
    emit(doc, o, text);
    return kExitPass;
}

int cmd_verify1(const CommonOpts& o, const std::string& command) {
    auto q = parse_q(o.q);
    if (!q) return kExitDomain;
    if (o.jmax < 0) return fail_domain("--jmax must be >= 0");
    const auto half = HalfInteger::from_rational(*q);
    if (!half)
        return fail_domain("theorem 1 applies to q in (1/2)Z only; got q = " + q->to_string());
    if (half->is_nonpositive_integer())
        return fail_domain("q = " + half->to_string() + " is a pole of Gamma");
    const CertificateReport rep = verify_theorem1(*half, static_cast<std::size_t>(o.jmax));
    emit(certificate_json(rep, command), o, certificate_text(rep));
    return rep.pass ? kExitPass : kExitVerifyFail;
}

int cmd_verify2(const CommonOpts& o) {
    auto q = parse_q(o.q);
    if (!q) return kExitDomain;
    if (o.jmax < 0) return fail_domain("--jmax must be >= 0");
    if (q->den() <= 2)
        return fail_domain("theorem 2 applies to q outside (1/2)Z; got q = " + q->to_string());
    const Theorem2Report rep = verify_theorem2(*q, static_cast<std::size_t>(o.jmax), o.prec);
    emit(theorem2_json(rep), o, theorem2_text(rep));
    return rep.pass ? kExitPass : kExitVerifyFail;
}

int cmd_constants(const CommonOpts& o) {
    const int digits = digits_for(o.prec);
    const unsigned k_max = o.n < 2 ? 9u : static_cast<unsigned>(o.n);
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["command"] = "constants";
    doc["prec"] = o.prec;
    std::string text;
    auto put = [&](const std::string& name, const BigFloat& v) {
        doc[name] = v.decimal(digits);
        text += name + " = " + v.decimal(digits) + "\n";
    };
    put("gamma", const_gamma(o.prec));
    put("pi", const_pi(o.prec));
    put("ln2", const_ln2(o.prec));
    Json zeta = Json::object();
    for (unsigned k = 2; k <= k_max; ++k) {
        const BigFloat z = const_zeta(k, o.prec);
        zeta[std::to_string(k)] = z.decimal(digits);
        text += "zeta(" + std::to_string(k) + ") = " + z.decimal(digits) + "\n";
    }
    doc["zeta"] = std::move(zeta);
    emit(doc, o, text);
    return kExitPass;
}

void attach_common(CLI::App* sub, CommonOpts& o, bool wants_q, bool wants_n, bool wants_jmax) {
    if (wants_q) sub->add_option("--q", o.q, "exact rational, e.g. 5/2")->required();
    if (wants_n) sub->add_option("--n", o.n, "highest derivative order");
    if (wants_jmax) sub->add_option("--jmax", o.jmax, "highest row index j");
    sub->add_option("--prec", o.prec, "working precision in bits (>= 32)");
    sub->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cache", o.cache, "path of the Bernoulli/Euler JSON cache");
    sub->add_option("--out", o.out, "write the report to a file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gammaq: exact Taylor coefficients of the Gamma function at half-integer points,\n"
        "numeric expansions at arbitrary rational points, and machine verification of the\n"
        "product/reflection coefficient identities behind them."};
    app.require_subcommand(1);

    CommonOpts o;
    CLI::App* compute = app.add_subcommand("compute", "print Gamma^(n)(q) for n = 0..N");
    attach_common(compute, o, true, true, false);
    compute->add_flag("--numeric", o.numeric, "also (or only) print numeric values");

    CLI::App* verify1 =
        app.add_subcommand("verify1", "check the triangular pi-power certificate at half-integer q");
    attach_common(verify1, o, true, false, true);

    CLI::App* verify2 =
        app.add_subcommand("verify2", "check the reflection identity rows at non-half-integer q");
    attach_common(verify2, o, true, false, true);

    CLI::App* certificate =
        app.add_subcommand("certificate", "emit the full certificate report for half-integer q");
    attach_common(certificate, o, true, false, true);

    CLI::App* constants = app.add_subcommand("constants", "print gamma, pi, ln 2, zeta(k)");
    attach_common(constants, o, false, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (o.prec < 32) return fail_domain("--prec must be >= 32");

    if (!o.cache.empty()) {
        const CacheLoad st = load_sequence_cache(o.cache);
        if (!st.loaded && st.message != "cache file absent")
            std::cerr << "warning: ignoring cache " << o.cache << " (" << st.message
                      << "); tables will be rebuilt\n";
    }

    int rc = kExitDomain;
    try {
        if (compute->parsed()) {
            rc = cmd_compute(o);
        } else if (verify1->parsed()) {
            rc = cmd_verify1(o, "verify1");
        } else if (certificate->parsed()) {
            rc = cmd_verify1(o, "certificate");
        } else if (verify2->parsed()) {
            rc = cmd_verify2(o);
        } else if (constants->parsed()) {
            rc = cmd_constants(o);
        }
    } catch (const PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = compute->parsed() ? kExitPole : kExitDomain;
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kExitVerifyFail;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        rc = kExitVerifyFail;
    }

    if (!o.cache.empty()) {
        // make sure the tables cover what this run needed before persisting
        const unsigned top = static_cast<unsigned>(2 * std::max<long>(o.jmax, o.n));
        ensure_bernoulli(top);
        ensure_euler(top);
        if (!store_sequence_cache(o.cache))
            std::cerr << "warning: cache " << o.cache << " is not writable; keeping tables in memory\n";
    }
    return rc;
}
