// dynamics.hpp — Exact dressed-phase time evolution, observable traces, the
// Poisson-sum inversion benchmark, and the closed-form/numeric spectrum table.

#pragma once

#include "jcm/coherent.hpp"

namespace jcm::dynamics {

enum class Picture { interaction, full };

struct EvolutionSpec {
    Ket               initial;
    model::JcmParams  params;
    double            t_max  = 10.0;  // in 1/lambda units when lambda = 1
    int               steps  = 101;
    Picture           picture = Picture::interaction;
};

struct EvolutionTrace {
    Eigen::VectorXd times;
    Eigen::VectorXd inversion;   // <sigma_3>(t)
    Eigen::VectorXd p_excited;
    Eigen::VectorXd entropy;     // atom-field entanglement entropy, nats
    Eigen::VectorXd norm_drift;  // | ||psi(t)|| - 1 |
};

// Rotates once into the frame where the generator is diagonal, applies exact
// eigenphases per sample, rotates back. No stepper, no accumulation of error
// across samples. The flagged |e, n_max> state is annihilated by the
// truncated interaction, so its rotated-frame phase is zero; the full picture
// adds the omega*N phases on top (energies referenced to a zero ground
// state).
class Evolver {
public:
    Evolver(const model::JcmParams& p, const Cutoff& c, Picture picture);

    Ket ket_at(const Ket& initial, double t) const;

    const Eigen::VectorXd& energies() const { return energies_; }
    const LinOp& rotation() const { return u_; }

private:
    LinOp           u_;
    Eigen::VectorXd energies_;
};

// Throws when the initial ket is not normalized within 1e-9 or steps < 2.
EvolutionTrace evolve(const EvolutionSpec& spec, const Cutoff& c);

// Analytic benchmark for the initial state |e> ⊗ |alpha|:
// W(t) = Σ_{n<=n_max} p_n cos(2 lambda sqrt(n+1) t) with Poisson weights p_n.
// Independent of the Evolver path.
Eigen::VectorXd inversion_series(Complex alpha, const model::JcmParams& p, const Cutoff& c,
                                 const Eigen::VectorXd& times);

struct SpectrumRow {
    int    total_excitation;
    Parity parity;
    double energy;          // omega*N ± lambda*sqrt(N)
    double numeric_energy;  // dense eigensolve cross-check
    double abs_err;
};

struct SpectrumReport {
    std::vector<SpectrumRow> rows;  // sorted by closed-form energy
    double max_pairing_error;
};

// Closed-form dressed energies against the eigenvalues of the dense full
// Hamiltonian. The numeric side diagonalizes H + (omega/2)·I — identical to
// omega*N + H_I, i.e. energies referenced to the zero-energy ground state —
// restricted to the physical subspace.
SpectrumReport spectrum_report(const model::JcmParams& p, const Cutoff& c);

// Largest local maximum of |w| for t in [pi sqrt(mean_n)/lambda,
// 3 pi sqrt(mean_n)/lambda], refined by quadratic interpolation on the grid.
// Returns the interpolated time; throws if the window holds no local maximum.
double find_first_revival(const Eigen::VectorXd& times, const Eigen::VectorXd& w,
                          double mean_n, double lambda);

} // namespace jcm::dynamics
