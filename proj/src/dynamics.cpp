#include "jcm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jcm::dynamics {

Evolver::Evolver(const model::JcmParams& p, const Cutoff& c, Picture picture)
    : u_(dressed::unitary(c)), energies_(c.dim()) {
    const LinOp h_id = dressed::diagonal_interaction(p, c);
    for (int i = 0; i < c.dim(); ++i) {
        double e = (i == c.unsafe_index()) ? 0.0 : h_id.mat(i, i).real();
        if (picture == Picture::full) {
            e += p.omega * static_cast<double>(BareLabel::from_index(i).excitation());
        }
        energies_(i) = e;
    }
}

Ket Evolver::ket_at(const Ket& initial, double t) const {
    Vector rotated = u_.mat * initial.amp;
    for (int i = 0; i < rotated.size(); ++i) {
        rotated(i) *= std::polar(1.0, -energies_(i) * t);
    }
    return Ket{u_.mat.adjoint() * rotated};
}

EvolutionTrace evolve(const EvolutionSpec& spec, const Cutoff& c) {
    if (spec.steps < 2) {
        throw std::invalid_argument("evolve: steps must be >= 2");
    }
    if (std::abs(spec.initial.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("evolve: initial ket is not normalized");
    }
    const Evolver ev(spec.params, c, spec.picture);
    const int n = spec.steps;

    EvolutionTrace trace;
    trace.times.resize(n);
    trace.inversion.resize(n);
    trace.p_excited.resize(n);
    trace.entropy.resize(n);
    trace.norm_drift.resize(n);

    const Vector rotated0 = ev.rotation().mat * spec.initial.amp;
    for (int k = 0; k < n; ++k) {
        const double t = k * spec.t_max / (n - 1);
        Vector rotated = rotated0;
        for (int i = 0; i < rotated.size(); ++i) {
            rotated(i) *= std::polar(1.0, -ev.energies()(i) * t);
        }
        const Ket psi{ev.rotation().mat.adjoint() * rotated};

        double pe = 0.0, pg = 0.0;
        for (int i = 0; i < psi.dim(); ++i) {
            const double w = std::norm(psi.amp(i));
            (i % 2 == 1 ? pe : pg) += w;
        }
        trace.times(k) = t;
        trace.inversion(k) = pe - pg;
        trace.p_excited(k) = pe;
        trace.entropy(k) = coherent::entanglement_entropy(psi);
        trace.norm_drift(k) = std::abs(psi.norm() - 1.0);
    }
    return trace;
}

Eigen::VectorXd inversion_series(Complex alpha, const model::JcmParams& p, const Cutoff& c,
                                 const Eigen::VectorXd& times) {
    const double mu = std::norm(alpha);
    Eigen::VectorXd weights(c.n_max + 1);
    double w = std::exp(-mu);
    for (int n = 0; n <= c.n_max; ++n) {
        weights(n) = w;
        w *= mu / static_cast<double>(n + 1);
    }
    Eigen::VectorXd out(times.size());
    for (int k = 0; k < times.size(); ++k) {
        double s = 0.0;
        for (int n = 0; n <= c.n_max; ++n) {
            s += weights(n) *
                 std::cos(2.0 * p.lambda * std::sqrt(static_cast<double>(n + 1)) * times(k));
        }
        out(k) = s;
    }
    return out;
}

SpectrumReport spectrum_report(const model::JcmParams& p, const Cutoff& c) {
    SpectrumReport report;
    report.rows.reserve(2 * c.n_max + 1);
    report.rows.push_back({0, Parity::plus, dressed::dressed_energy(p, 0, Parity::plus), 0.0, 0.0});
    for (int n = 1; n <= c.n_max; ++n) {
        for (Parity parity : {Parity::plus, Parity::minus}) {
            report.rows.push_back({n, parity, dressed::dressed_energy(p, n, parity), 0.0, 0.0});
        }
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const SpectrumRow& a, const SpectrumRow& b) { return a.energy < b.energy; });

    Matrix shifted = model::hamiltonian_full(p, c).mat;
    shifted += (0.5 * p.omega) * Matrix::Identity(c.dim(), c.dim());
    const Matrix physical = space::physical_restriction(shifted, c);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(physical);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("spectrum_report: eigensolve failed");
    }
    const Eigen::VectorXd numeric = solver.eigenvalues();  // ascending

    report.max_pairing_error = 0.0;
    for (int i = 0; i < static_cast<int>(report.rows.size()); ++i) {
        report.rows[i].numeric_energy = numeric(i);
        report.rows[i].abs_err = std::abs(numeric(i) - report.rows[i].energy);
        report.max_pairing_error = std::max(report.max_pairing_error, report.rows[i].abs_err);
    }
    return report;
}

double find_first_revival(const Eigen::VectorXd& times, const Eigen::VectorXd& w,
                          double mean_n, double lambda) {
    const double lo = std::numbers::pi * std::sqrt(mean_n) / lambda;
    const double hi = 3.0 * std::numbers::pi * std::sqrt(mean_n) / lambda;
    int best = -1;
    double best_val = -1.0;
    for (int k = 1; k + 1 < times.size(); ++k) {
        if (times(k) < lo || times(k) > hi) continue;
        const double y0 = std::abs(w(k - 1));
        const double y1 = std::abs(w(k));
        const double y2 = std::abs(w(k + 1));
        if (y1 >= y0 && y1 >= y2 && y1 > best_val) {
            best_val = y1;
            best = k;
        }
    }
    if (best < 0) {
        throw std::runtime_error("find_first_revival: no local maximum in the search window");
    }
    const double y0 = std::abs(w(best - 1));
    const double y1 = std::abs(w(best));
    const double y2 = std::abs(w(best + 1));
    const double denom = y0 - 2.0 * y1 + y2;
    double shift = 0.0;
    if (std::abs(denom) > 1e-300) {
        shift = 0.5 * (y0 - y2) / denom;
        shift = std::clamp(shift, -1.0, 1.0);
    }
    const double h = times(1) - times(0);
    return times(best) + shift * h;
}

} // namespace jcm::dynamics
