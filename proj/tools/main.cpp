// jcm — construct, verify, and simulate the resonant atom-field model on a
// truncated space. Subcommands: spectrum, verify, evolve, coherent,
// completeness. Exit codes: 0 success, 1 check failure, 2 usage error.

#include "jcm/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

struct RunConfig {
    int         n_max = 32;
    double      lambda = 1.0;
    double      omega = 10.0;
    double      tolerance = 1e-10;
    bool        tolerance_set = false;
    std::string out;
    std::string format = "csv";
    int         threads = 1;
};

jcm::io::Format parse_format(const std::string& name) {
    return name == "json" ? jcm::io::Format::json : jcm::io::Format::csv;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw CLI::ValidationError("--out", "cannot open '" + path + "' for writing");
    }
    return os;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--nmax", cfg.n_max, "photon-number cutoff")->check(CLI::PositiveNumber);
    cmd->add_option("--lambda", cfg.lambda, "coupling rate (> 0)");
    cmd->add_option("--omega", cfg.omega, "shared atom/field frequency (>= 0)");
    cmd->add_option("--tolerance", cfg.tolerance, "tolerance override")
        ->each([&cfg](const std::string&) { cfg.tolerance_set = true; });
    cmd->add_option("--out", cfg.out, "output file path");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--threads", cfg.threads, "worker threads for quadrature")
        ->check(CLI::PositiveNumber);
    cmd->set_config("--config", "", "config file with key = value lines");
}

// Initial-state spec grammar:
//   bare:<g|e>:<n> | coh:<+|->:<re>,<im> | spin:<n>:<re>,<im> | barecoh:<g|e>:<re>,<im>
const char* kSpecGrammar =
    "bare:<g|e>:<n> | coh:<+|->:<re>,<im> | spin:<n>:<re>,<im> | barecoh:<g|e>:<re>,<im>";

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

jcm::Complex parse_complex(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw std::invalid_argument("expected <re>,<im>");
    return {std::stod(parts[0]), std::stod(parts[1])};
}

jcm::Ket parse_initial(const std::string& spec, const jcm::Cutoff& c) {
    const auto parts = split(spec, ':');
    try {
        if (parts.size() == 3 && parts[0] == "bare") {
            const jcm::Atom atom = (parts[1] == "e") ? jcm::Atom::e : jcm::Atom::g;
            if (parts[1] != "e" && parts[1] != "g") throw std::invalid_argument("atom must be g|e");
            return jcm::space::basis_ket({atom, std::stoi(parts[2])}, c);
        }
        if (parts.size() == 3 && parts[0] == "coh") {
            if (parts[1] != "+" && parts[1] != "-") {
                throw std::invalid_argument("parity must be +|-");
            }
            const jcm::Parity parity =
                (parts[1] == "+") ? jcm::Parity::plus : jcm::Parity::minus;
            const jcm::Complex alpha = parse_complex(parts[2]);
            if (parity == jcm::Parity::minus && alpha == jcm::Complex(0.0, 0.0)) {
                throw std::invalid_argument(
                    "the (0,-) dressed state does not exist; coh:-:0,0 has no meaning");
            }
            return jcm::coherent::jcm_coherent({alpha, parity}, c);
        }
        if (parts.size() == 3 && parts[0] == "spin") {
            return jcm::coherent::jcm_spin_coherent(
                {parse_complex(parts[2]), std::stoi(parts[1])}, c);
        }
        if (parts.size() == 3 && parts[0] == "barecoh") {
            const jcm::Atom atom = (parts[1] == "e") ? jcm::Atom::e : jcm::Atom::g;
            if (parts[1] != "e" && parts[1] != "g") throw std::invalid_argument("atom must be g|e");
            return jcm::coherent::bare_coherent(atom, parse_complex(parts[2]), c);
        }
    } catch (const jcm::TailBoundError&) {
        throw;  // library error with a suggested cutoff; surfaced as-is
    } catch (const std::exception& e) {
        throw CLI::ValidationError(
            "initial", std::string(e.what()) + "; expected grammar: " + kSpecGrammar);
    }
    throw CLI::ValidationError("initial", "unparseable state spec '" + spec +
                                              "'; expected grammar: " + kSpecGrammar);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated-space toolkit for the resonant atom-field model"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* cmd_spectrum = app.add_subcommand(
        "spectrum", "closed-form dressed energies vs dense eigenvalues");
    add_common(cmd_spectrum, cfg);

    auto* cmd_verify = app.add_subcommand("verify", "run the operator-identity suite");
    add_common(cmd_verify, cfg);

    auto* cmd_evolve = app.add_subcommand("evolve", "time evolution trace");
    add_common(cmd_evolve, cfg);
    std::string initial_spec = "bare:e:0";
    double t_max = 10.0;
    int steps = 1001;
    std::string picture = "interaction";
    cmd_evolve->add_option("initial", initial_spec,
                           std::string("initial state: ") + kSpecGrammar);
    cmd_evolve->add_option("--tmax", t_max, "evolution time span");
    cmd_evolve->add_option("--steps", steps, "samples on the uniform grid (>= 2)");
    cmd_evolve->add_option("--picture", picture, "evolution picture")
        ->check(CLI::IsMember({"interaction", "full"}));

    auto* cmd_coherent = app.add_subcommand("coherent", "dressed coherent-state amplitudes");
    add_common(cmd_coherent, cfg);
    std::string alpha_str = "2,0";
    std::string parity_str = "+";
    std::string basis = "dressed";
    cmd_coherent->add_option("--alpha", alpha_str, "complex amplitude <re>,<im>");
    cmd_coherent->add_option("--parity", parity_str, "dressed family")
        ->check(CLI::IsMember({"+", "-"}));
    cmd_coherent->add_option("--basis", basis, "export basis")
        ->check(CLI::IsMember({"bare", "dressed"}));

    auto* cmd_completeness =
        app.add_subcommand("completeness", "quadrature resolution of the identity");
    add_common(cmd_completeness, cfg);
    jcm::coherent::CompletenessOptions copts;
    cmd_completeness->add_option("--radial", copts.radial_nodes, "radial quadrature nodes");
    cmd_completeness->add_option("--angular", copts.angular_nodes, "angular quadrature nodes");
    cmd_completeness->add_option("--probe", copts.probe_dim, "probe subspace max excitation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const jcm::Cutoff cutoff(cfg.n_max);
        const jcm::model::JcmParams params(cfg.omega, cfg.lambda);
        const jcm::io::Format format = parse_format(cfg.format);

        // Summary lines go to stderr when the data itself occupies stdout.
        std::ostream& note = cfg.out.empty() ? std::cerr : std::cout;

        if (app.got_subcommand(cmd_spectrum)) {
            const auto report = jcm::dynamics::spectrum_report(params, cutoff);
            if (cfg.out.empty()) {
                jcm::io::write_spectrum(std::cout, report, format);
            } else {
                auto os = open_output(cfg.out);
                jcm::io::write_spectrum(os, report, format);
            }
            note << "spectrum: " << report.rows.size() << " levels, max pairing error "
                 << jcm::io::format_double(report.max_pairing_error) << "\n";
            return report.max_pairing_error <= cfg.tolerance ? 0 : 1;
        }

        if (app.got_subcommand(cmd_verify)) {
            jcm::verify::VerifyConfig vcfg;
            vcfg.n_max = cfg.n_max;
            vcfg.lambda = cfg.lambda;
            vcfg.omega = cfg.omega;
            if (cfg.tolerance_set) vcfg.tolerance_override = cfg.tolerance;
            const auto results = jcm::verify::run_suite(vcfg);
            // The report is JSON unless another format is asked for explicitly.
            const auto vformat =
                cmd_verify->count("--format") > 0 ? format : jcm::io::Format::json;
            if (cfg.out.empty()) {
                jcm::io::write_verification(std::cout, results, vformat);
            } else {
                auto os = open_output(cfg.out);
                jcm::io::write_verification(os, results, vformat);
            }
            int failed = 0;
            for (const auto& r : results) {
                if (!r.pass) ++failed;
            }
            note << "verify: " << results.size() - failed << "/" << results.size()
                 << " checks passed\n";
            return failed == 0 ? 0 : 1;
        }

        if (app.got_subcommand(cmd_evolve)) {
            jcm::dynamics::EvolutionSpec spec{parse_initial(initial_spec, cutoff), params, t_max,
                                              steps,
                                              picture == "full"
                                                  ? jcm::dynamics::Picture::full
                                                  : jcm::dynamics::Picture::interaction};
            const auto trace = jcm::dynamics::evolve(spec, cutoff);
            if (cfg.out.empty()) {
                jcm::io::write_trace(std::cout, trace, format);
            } else {
                auto os = open_output(cfg.out);
                jcm::io::write_trace(os, trace, format);
            }
            double max_inv = 0.0;
            for (int k = 0; k < trace.inversion.size(); ++k) {
                max_inv = std::max(max_inv, std::abs(trace.inversion(k)));
            }
            note << "evolve: final norm drift "
                 << jcm::io::format_double(trace.norm_drift(trace.norm_drift.size() - 1))
                 << ", max |inversion| " << jcm::io::format_double(max_inv) << "\n";
            return 0;
        }

        if (app.got_subcommand(cmd_coherent)) {
            const jcm::Complex alpha = parse_complex(alpha_str);
            const jcm::Parity parity =
                parity_str == "+" ? jcm::Parity::plus : jcm::Parity::minus;
            if (parity == jcm::Parity::minus && alpha == jcm::Complex(0.0, 0.0)) {
                throw CLI::ValidationError("--alpha",
                                           "the (0,-) dressed state does not exist");
            }
            const jcm::Ket ket = jcm::coherent::jcm_coherent({alpha, parity}, cutoff);
            auto write = [&](std::ostream& os) {
                if (basis == "bare") {
                    jcm::io::write_state_bare(os, ket, format);
                } else {
                    jcm::io::write_state_dressed(os, ket, cutoff, format);
                }
            };
            if (cfg.out.empty()) {
                write(std::cout);
            } else {
                auto os = open_output(cfg.out);
                write(os);
            }
            return 0;
        }

        if (app.got_subcommand(cmd_completeness)) {
            copts.threads = cfg.threads;
            const auto report = jcm::coherent::completeness_check(cutoff, copts);
            const double tol = cfg.tolerance_set ? cfg.tolerance : 1e-9;
            const auto cformat =
                cmd_completeness->count("--format") > 0 ? format : jcm::io::Format::json;
            if (cfg.out.empty()) {
                jcm::io::write_completeness(std::cout, report, tol, cformat);
            } else {
                auto os = open_output(cfg.out);
                jcm::io::write_completeness(os, report, tol, cformat);
            }
            note << "completeness: max residual "
                 << jcm::io::format_double(report.max_residual) << "\n";
            return report.max_residual <= tol ? 0 : 1;
        }
    } catch (const jcm::TailBoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
