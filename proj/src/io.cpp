#include "jcm/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <numbers>
#include <ostream>

namespace jcm::io {

using nlohmann::json;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_trace(std::ostream& os, const dynamics::EvolutionTrace& trace, Format format) {
    if (format == Format::csv) {
        os << "t,inversion,p_excited,entropy_bits,norm_drift\n";
        for (int k = 0; k < trace.times.size(); ++k) {
            os << format_double(trace.times(k)) << ',' << format_double(trace.inversion(k))
               << ',' << format_double(trace.p_excited(k)) << ','
               << format_double(trace.entropy(k) / std::numbers::ln2) << ','
               << format_double(trace.norm_drift(k)) << '\n';
        }
        return;
    }
    json rows = json::array();
    for (int k = 0; k < trace.times.size(); ++k) {
        rows.push_back({{"t", trace.times(k)},
                        {"inversion", trace.inversion(k)},
                        {"p_excited", trace.p_excited(k)},
                        {"entropy_bits", trace.entropy(k) / std::numbers::ln2},
                        {"norm_drift", trace.norm_drift(k)}});
    }
    os << rows.dump(2) << '\n';
}

void write_spectrum(std::ostream& os, const dynamics::SpectrumReport& report, Format format) {
    if (format == Format::csv) {
        os << "N,parity,energy,numeric_energy,abs_err\n";
        for (const auto& row : report.rows) {
            os << row.total_excitation << ',' << parity_char(row.parity) << ','
               << format_double(row.energy) << ',' << format_double(row.numeric_energy) << ','
               << format_double(row.abs_err) << '\n';
        }
        return;
    }
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"N", row.total_excitation},
                        {"parity", std::string(1, parity_char(row.parity))},
                        {"energy", row.energy},
                        {"numeric_energy", row.numeric_energy},
                        {"abs_err", row.abs_err}});
    }
    os << json{{"rows", rows}, {"max_pairing_error", report.max_pairing_error}}.dump(2) << '\n';
}

void write_state_bare(std::ostream& os, const Ket& ket, Format format) {
    if (format == Format::csv) {
        os << "basis_index,re,im\n";
        for (int i = 0; i < ket.dim(); ++i) {
            os << i << ',' << format_double(ket.amp(i).real()) << ','
               << format_double(ket.amp(i).imag()) << '\n';
        }
        return;
    }
    json rows = json::array();
    for (int i = 0; i < ket.dim(); ++i) {
        rows.push_back({{"basis_index", i}, {"re", ket.amp(i).real()}, {"im", ket.amp(i).imag()}});
    }
    os << rows.dump(2) << '\n';
}

void write_state_dressed(std::ostream& os, const Ket& ket, const Cutoff& c, Format format) {
    const auto labels = dressed::dressed_labels(c);
    std::vector<Complex> coeffs;
    coeffs.reserve(labels.size());
    for (const auto& label : labels) {
        coeffs.push_back(space::overlap(dressed::dressed_ket(label, c), ket));
    }
    if (format == Format::csv) {
        os << "n,parity,re,im\n";
        for (std::size_t i = 0; i < labels.size(); ++i) {
            os << labels[i].n << ',' << parity_char(labels[i].parity) << ','
               << format_double(coeffs[i].real()) << ',' << format_double(coeffs[i].imag())
               << '\n';
        }
        return;
    }
    json rows = json::array();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        rows.push_back({{"n", labels[i].n},
                        {"parity", std::string(1, parity_char(labels[i].parity))},
                        {"re", coeffs[i].real()},
                        {"im", coeffs[i].imag()}});
    }
    os << rows.dump(2) << '\n';
}

void write_verification(std::ostream& os, const std::vector<verify::CheckResult>& results,
                        Format format) {
    if (format == Format::csv) {
        os << "check_name,residual,tolerance,pass\n";
        for (const auto& r : results) {
            os << r.name << ',' << format_double(r.residual) << ',' << format_double(r.tolerance)
               << ',' << (r.pass ? "true" : "false") << '\n';
        }
        return;
    }
    json rows = json::array();
    for (const auto& r : results) {
        rows.push_back({{"check_name", r.name},
                        {"residual", r.residual},
                        {"tolerance", r.tolerance},
                        {"pass", r.pass}});
    }
    os << rows.dump(2) << '\n';
}

void write_completeness(std::ostream& os, const coherent::CompletenessReport& report,
                        double tolerance, Format format) {
    const bool pass = report.max_residual <= tolerance;
    if (format == Format::csv) {
        os << "probe_dim,radial_nodes,angular_nodes,max_residual,cross_family_max,tolerance,pass\n";
        os << report.probe_dim << ',' << report.radial_nodes << ',' << report.angular_nodes
           << ',' << format_double(report.max_residual) << ','
           << format_double(report.cross_family_max) << ',' << format_double(tolerance) << ','
           << (pass ? "true" : "false") << '\n';
        return;
    }
    os << json{{"probe_dim", report.probe_dim},
               {"radial_nodes", report.radial_nodes},
               {"angular_nodes", report.angular_nodes},
               {"max_residual", report.max_residual},
               {"cross_family_max", report.cross_family_max},
               {"tolerance", tolerance},
               {"pass", pass}}
              .dump(2)
       << '\n';
}

} // namespace jcm::io
