// Command-line front end for the Sheffer-Dunkl library: family tables,
// verification suites, moment export, Bessel-K density cross-checks.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed (the
// report is still emitted), 2 usage or domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dunkl/dunkl.hpp"

namespace {

using dunkl::json;

constexpr std::size_t kFallbackOrder = 16;
constexpr const char* kOrderEnvVar = "SHEFFER_DUNKL_ORDER";

std::size_t default_order() {
    const char* env = std::getenv(kOrderEnvVar);
    if (env == nullptr || *env == '\0') return kFallbackOrder;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1 || v > 512) {
        throw dunkl::usage_error(std::string(kOrderEnvVar) + " must be an integer in [1, 512]");
    }
    return static_cast<std::size_t>(v);
}

void emit(const std::string& text, const std::optional<std::string>& path) {
    if (path) {
        std::ofstream out(*path);
        if (!out) throw dunkl::usage_error("cannot open output file '" + *path + "'");
        out << text;
    } else {
        std::cout << text;
    }
}

std::string float_str(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

/// The exact Thorne-side functional each preset is verified against.
dunkl::MomentFunctional canonical_thorne_functional(dunkl::FamilyName family,
                                                    const dunkl::DunklParam& nu,
                                                    std::size_t n_max) {
    using dunkl::DiracAtom;
    using dunkl::MomentFunctional;
    using dunkl::Rational;
    const Rational g1 = dunkl::gamma_factorial(1, nu);
    const Rational g2 = dunkl::gamma_factorial(2, nu);
    switch (family) {
        case dunkl::FamilyName::truncated:
        case dunkl::FamilyName::appell_discrete_truncated:
            return MomentFunctional::atomic(
                {DiracAtom{Rational(0), 0, Rational(1)}, DiracAtom{Rational(0), 1, g1}});
        case dunkl::FamilyName::truncated_t2:
            return MomentFunctional::atomic(
                {DiracAtom{Rational(0), 0, Rational(1)}, DiracAtom{Rational(0), 2, -(g2 / Rational(2))}});
        case dunkl::FamilyName::bernoulli:
            return MomentFunctional::named_density(MomentFunctional::DensityId::bernoulli_weight, nu);
        case dunkl::FamilyName::euler:
        case dunkl::FamilyName::boole:
            return MomentFunctional::atomic({DiracAtom{Rational(-1), 0, Rational(1, 2)},
                                             DiracAtom{Rational(1), 0, Rational(1, 2)}});
        case dunkl::FamilyName::factorial:
            return MomentFunctional::delta0();
        case dunkl::FamilyName::bernoulli_2nd: {
            // g = t/G; its moment sequence is the family's Thorne data.
            const auto g = dunkl::dunkl_kernel_series(dunkl::KernelKind::IShift, nu, n_max).reciprocal();
            return MomentFunctional::moment_sequence(dunkl::moments_of_series(g, n_max));
        }
    }
    throw dunkl::usage_error("unknown family");
}

int run_gamma(const std::string& nu_text, std::size_t max_n, const std::string& format,
              const std::optional<std::string>& output) {
    const dunkl::DunklParam nu = dunkl::DunklParam::from_string(nu_text);
    std::vector<dunkl::Rational> values;
    for (std::size_t n = 0; n <= max_n; ++n) values.push_back(dunkl::gamma_factorial(n, nu));

    std::ostringstream os;
    if (format == "json") {
        json coeffs = json::array();
        for (const auto& v : values) coeffs.push_back(v.str());
        os << json{{"nu", nu.str()}, {"values", coeffs}}.dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,gamma\n";
        for (std::size_t n = 0; n < values.size(); ++n) os << n << "," << values[n].str() << "\n";
    } else {
        for (std::size_t n = 0; n < values.size(); ++n) os << (n == 0 ? "" : ", ") << values[n].str();
        os << "\n";
    }
    emit(os.str(), output);
    return 0;
}

int run_sequence(const std::string& family, const std::string& nu_text, std::size_t order,
                 std::size_t count, const std::string& format,
                 const std::optional<std::string>& output) {
    const dunkl::DunklParam nu = dunkl::DunklParam::from_string(nu_text);
    const auto spec = dunkl::preset_family(family, nu, order);
    const auto seq = dunkl::generate_sequence(spec, count);

    std::ostringstream os;
    if (format == "json") {
        os << dunkl::to_json(seq).dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,k,coeff\n";
        for (std::size_t n = 0; n < seq.size(); ++n) {
            for (std::size_t k = 0; k < seq[n].coeffs().size(); ++k) {
                os << n << "," << k << "," << seq[n].coeff(k).str() << "\n";
            }
        }
    } else {
        for (std::size_t n = 0; n < seq.size(); ++n) {
            os << "s_" << n << "(x) = " << seq[n].str() << "\n";
        }
    }
    emit(os.str(), output);
    return 0;
}

int run_verify_thorne(const std::string& family, const std::string& nu_text, std::size_t order,
                      std::size_t n_max, const std::string& format,
                      const std::optional<std::string>& output) {
    const dunkl::DunklParam nu = dunkl::DunklParam::from_string(nu_text);
    const auto name = dunkl::family_from_string(family);
    const auto seq = dunkl::generate_sequence(dunkl::preset_family(name, nu, order), n_max);
    const auto functional = canonical_thorne_functional(name, nu, n_max);
    const auto report = dunkl::thorne_verify(functional, seq);

    std::ostringstream os;
    if (format == "json") {
        os << dunkl::to_json(report).dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,r,value,expected,pass\n";
        for (const auto& p : report.pairs) {
            os << p.n << "," << p.r << "," << p.value.str() << "," << p.expected.str() << ","
               << (p.pass ? "true" : "false") << "\n";
        }
    } else {
        for (const auto& p : report.pairs) {
            os << "n=" << p.n << " r=" << p.r << " value=" << p.value.str()
               << " expected=" << p.expected.str() << (p.pass ? " ok" : " FAIL") << "\n";
        }
        os << "RESULT: " << (report.all_pass ? "PASS" : "FAIL") << "\n";
    }
    emit(os.str(), output);
    return report.all_pass ? 0 : 1;
}

int run_verify_sheffer(const std::string& family, const std::string& nu_text, std::size_t order,
                       std::size_t n_max, const std::string& format,
                       const std::optional<std::string>& output) {
    const dunkl::DunklParam nu = dunkl::DunklParam::from_string(nu_text);
    const auto spec = dunkl::preset_family(family, nu, order);
    const auto expected = dunkl::generate_sequence(spec, n_max);
    const auto assoc = dunkl::generate_sequence(dunkl::associated_family(spec), n_max);
    const auto omega = dunkl::moments_of_series(spec.g.reciprocal(), n_max);
    const auto rebuilt = dunkl::sheffer_reconstruct(omega, assoc);

    bool all_pass = true;
    json rows = json::array();
    std::ostringstream pretty;
    for (std::size_t n = 0; n < expected.size(); ++n) {
        const bool pass = rebuilt[n] == expected[n];
        all_pass = all_pass && pass;
        rows.push_back(json{{"n", n}, {"pass", pass}});
        pretty << "n=" << n << (pass ? " ok" : " FAIL") << "\n";
    }

    std::ostringstream os;
    if (format == "json") {
        os << json{{"family", family}, {"nu", nu.str()}, {"rows", rows}, {"all_pass", all_pass}}.dump(2)
           << "\n";
    } else if (format == "csv") {
        os << "n,pass\n";
        for (std::size_t n = 0; n < expected.size(); ++n) {
            os << n << "," << (rows[n]["pass"].get<bool>() ? "true" : "false") << "\n";
        }
    } else {
        os << pretty.str() << "RESULT: " << (all_pass ? "PASS" : "FAIL") << "\n";
    }
    emit(os.str(), output);
    return all_pass ? 0 : 1;
}

int run_moments(const std::string& family, const std::string& nu_text, std::size_t order,
                std::size_t max_n, const std::string& format,
                const std::optional<std::string>& output) {
    const dunkl::DunklParam nu = dunkl::DunklParam::from_string(nu_text);
    const auto spec = dunkl::preset_family(family, nu, order);
    const auto mu = dunkl::moments_of_series(spec.g, max_n);
    const auto omega = dunkl::moments_of_series(spec.g.reciprocal(), max_n);

    std::ostringstream os;
    if (format == "json") {
        json jmu = json::array(), jom = json::array();
        for (const auto& v : mu) jmu.push_back(v.str());
        for (const auto& v : omega) jom.push_back(v.str());
        os << json{{"family", family}, {"nu", nu.str()}, {"mu", jmu}, {"omega", jom}}.dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,mu,omega\n";
        for (std::size_t n = 0; n <= max_n; ++n) {
            os << n << "," << mu[n].str() << "," << omega[n].str() << "\n";
        }
    } else {
        os << "mu    =";
        for (const auto& v : mu) os << " " << v.str();
        os << "\nomega =";
        for (const auto& v : omega) os << " " << v.str();
        os << "\n";
    }
    emit(os.str(), output);
    return 0;
}

int run_besselk_check(const std::string& density, const std::string& nu_text, unsigned n_max,
                      double tol, const std::string& format,
                      const std::optional<std::string>& output) {
    double nu = 0.0;
    try {
        nu = dunkl::Rational::from_string(nu_text).to_double();
    } catch (const dunkl::usage_error&) {
        std::size_t pos = 0;
        nu = std::stod(nu_text, &pos);
        if (pos != nu_text.size()) throw dunkl::usage_error("cannot parse nu '" + nu_text + "'");
    }
    const dunkl::numeric::DensityEval d(dunkl::numeric::density_from_string(density), nu);
    const auto report = dunkl::numeric::crosscheck_moments(d, n_max, tol);

    std::ostringstream os;
    if (format == "json") {
        os << dunkl::to_json(report).dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,numeric,target,rel_err\n";
        for (const auto& r : report.rows) {
            os << r.n << "," << float_str(r.numeric) << "," << float_str(r.target) << ","
               << float_str(r.rel_err) << "\n";
        }
    } else {
        for (const auto& r : report.rows) {
            os << "n=" << r.n << " numeric=" << float_str(r.numeric) << " target=" << float_str(r.target)
               << " rel_err=" << float_str(r.rel_err) << "\n";
        }
        os << "RESULT: " << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    emit(os.str(), output);
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sheffer-Dunkl polynomial sequences, their Stieltjes verifications, "
                 "and Bessel-K density cross-checks"};
    app.require_subcommand(1);

    std::string nu_text = "-1/2";
    std::string family = "truncated";
    std::string format = "pretty";
    std::string density = "besselK_even";
    std::optional<std::string> output;
    std::size_t order = 0;
    std::size_t max_n = 16;
    std::size_t count = 0;
    std::size_t n_max = 8;
    unsigned bessel_n_max = 8;
    double tol = 1e-6;

    const auto add_common = [&](CLI::App* cmd, bool with_family) {
        cmd->add_option("--nu", nu_text, "Dunkl parameter as a rational 'p/q' (> -1)");
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"pretty", "json", "csv"}))
            ->capture_default_str();
        cmd->add_option("--output", output, "Write the report to a file instead of stdout");
        if (with_family) {
            std::vector<std::string> names;
            for (const auto& [value, name] : dunkl::family_names()) names.push_back(name);
            cmd->add_option("--family", family, "Preset family")->check(CLI::IsMember(names));
        }
    };

    auto* gamma_cmd = app.add_subcommand("gamma", "Print the generalized factorials gamma_{0..max}");
    add_common(gamma_cmd, false);
    gamma_cmd->add_option("--max", max_n, "Largest index")->capture_default_str();

    auto* seq_cmd = app.add_subcommand("sequence", "Generate a preset family s_0..s_count");
    add_common(seq_cmd, true);
    seq_cmd->add_option("--order", order, "Series truncation order (default: env or 16)");
    seq_cmd->add_option("--count", count, "Generate s_0..s_count (default: the order)");

    auto* thorne_cmd =
        app.add_subcommand("verify-thorne", "Biorthogonality table against the family's measure");
    add_common(thorne_cmd, true);
    thorne_cmd->add_option("--order", order, "Series truncation order (default: env or 16)");
    thorne_cmd->add_option("--n-max", n_max, "Verify 0 <= r <= n <= n-max")->capture_default_str();

    auto* sheffer_cmd = app.add_subcommand(
        "verify-sheffer", "Translation-integral reconstruction against the generated family");
    add_common(sheffer_cmd, true);
    sheffer_cmd->add_option("--order", order, "Series truncation order (default: env or 16)");
    sheffer_cmd->add_option("--n-max", n_max, "Compare s_0..s_n-max")->capture_default_str();

    auto* moments_cmd =
        app.add_subcommand("moments", "Export the mu (of g) and omega (of 1/g) moment sequences");
    add_common(moments_cmd, true);
    moments_cmd->add_option("--order", order, "Series truncation order (default: env or 16)");
    moments_cmd->add_option("--max", max_n, "Largest moment index")->capture_default_str();

    auto* bessel_cmd =
        app.add_subcommand("besselk-check", "Quadrature moments of a Bessel-K density vs gamma targets");
    bessel_cmd->add_option("--density", density, "besselK_signed (or 'signed') / besselK_even ('even')");
    bessel_cmd->add_option("--nu", nu_text, "Dunkl parameter (rational or float)");
    bessel_cmd->add_option("--n-max", bessel_n_max, "Largest moment")->capture_default_str();
    bessel_cmd->add_option("--tol", tol, "Relative tolerance")->capture_default_str();
    bessel_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    bessel_cmd->add_option("--output", output, "Write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (order == 0) order = default_order();
        if (count == 0) count = order;

        if (gamma_cmd->parsed()) return run_gamma(nu_text, max_n, format, output);
        if (seq_cmd->parsed()) return run_sequence(family, nu_text, order, count, format, output);
        if (thorne_cmd->parsed()) {
            return run_verify_thorne(family, nu_text, order, n_max, format, output);
        }
        if (sheffer_cmd->parsed()) {
            return run_verify_sheffer(family, nu_text, order, n_max, format, output);
        }
        if (moments_cmd->parsed()) return run_moments(family, nu_text, order, max_n, format, output);
        if (bessel_cmd->parsed()) {
            return run_besselk_check(density, nu_text, bessel_n_max, tol, format, output);
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const dunkl::quadrature_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
