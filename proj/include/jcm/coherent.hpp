// coherent.hpp — Oscillator coherent states on the truncated field, dressed
// coherent/spin-coherent states, the quadrature resolution of identity, and
// the entanglement entropy of pure atom-field states.

#pragma once

#include "jcm/dressed.hpp"

namespace jcm::coherent {

// Poisson weight mass above m for mean mu: Σ_{n>m} e^{-mu} mu^n / n!.
double poisson_tail(double mu, int m);

// Smallest cutoff m with poisson_tail(mu, m) <= tol.
int required_cutoff(double mu, double tol);

// Truncation budget for coherent-state construction: the Poisson mass lost to
// the cutoff must stay below this.
inline constexpr double kTailTol = 1e-10;

// Field-sector amplitudes e^{-|alpha|^2/2} alpha^n / √n!, n = 0..n_max, by
// stable upward recurrence. Throws TailBoundError when the lost mass exceeds
// kTailTol.
Eigen::VectorXcd coherent_field(Complex alpha, const Cutoff& c);

// |atom> ⊗ |alpha> on the full space.
Ket bare_coherent(Atom atom, Complex alpha, const Cutoff& c);

struct CoherentLabel {
    Complex alpha;
    Parity  parity;
};

// |alpha,+> = Σ c_n |n,+>;  |alpha,-> = Σ c_n |n+1,->. The minus family sits
// one excitation higher, so its tail constraint applies at n_max - 1.
Ket jcm_coherent(const CoherentLabel& label, const Cutoff& c);

struct CompletenessReport {
    int    probe_dim;
    int    radial_nodes;
    int    angular_nodes;
    double max_residual;      // probe block of the quadrature sum vs identity
    double cross_family_max;  // +/- mixing block, structurally zero
};

struct CompletenessOptions {
    int radial_nodes  = 32;
    int angular_nodes = 64;
    int probe_dim     = 6;
    int threads       = 1;
};

// Integrates (d^2 alpha / pi)(|alpha,+><alpha,+| + |alpha,-><alpha,-|) by
// Gauss-Laguerre radial (in r^2) x uniform angular quadrature and compares
// against the identity on dressed labels with n <= probe_dim. Refuses with
// the required orders when the quadrature cannot be exact for the probe.
CompletenessReport completeness_check(const Cutoff& c, const CompletenessOptions& opts);

// (|g> + zeta|e>) / √(1+|zeta|^2) in (g, e) ordering.
Eigen::Vector2cd spin_coherent_atom(Complex zeta);

struct SpinCoherentLabel {
    Complex zeta;
    int     n;
};

// (|n,+> + zeta|n+1,->) / √(1+|zeta|^2); requires n+1 <= n_max.
Ket jcm_spin_coherent(const SpinCoherentLabel& label, const Cutoff& c);

// Von Neumann entropy of the reduced atom state, in nats (ln 2 at maximal
// entanglement). entanglement_entropy_bits rescales to bits.
double entanglement_entropy(const Ket& ket);
double entanglement_entropy_bits(const Ket& ket);

// <k|A|k> via the sequential inner product.
Complex expectation(const LinOp& op, const Ket& k);

// Gauss-Laguerre rule for ∫_0^∞ e^{-t} f(t) dt, exact for polynomials of
// degree <= 2*nodes - 1 (Golub-Welsch on the Jacobi matrix).
struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

QuadratureRule gauss_laguerre(int nodes);

namespace detail {

// Coherent assembly without the Gaussian prefactor and without the tail gate;
// the quadrature supplies the Gaussian through the Laguerre weight.
Ket jcm_coherent_unnormalized(Complex alpha, Parity parity, const Cutoff& c);

} // namespace detail

} // namespace jcm::coherent
