// model.hpp — Jaynes–Cummings Hamiltonians on the truncated space, the
// excitation-number operator, number-shift (Susskind–Glogower) operators, and
// the anti-Hermitian generator of the diagonalizing rotation.

#pragma once

#include "jcm/space.hpp"

namespace jcm::model {

// Resonant coupling parameters in hbar = 1 units. The atom and field share a
// single frequency omega; lambda is the coupling rate.
struct JcmParams {
    double omega;
    double lambda;

    JcmParams(double omega_, double lambda_) : omega(omega_), lambda(lambda_) {
        if (!(lambda > 0.0)) {
            throw std::invalid_argument("JcmParams: lambda must be > 0");
        }
        if (!(omega >= 0.0)) {
            throw std::invalid_argument("JcmParams: omega must be >= 0");
        }
    }
};

// H = (omega/2) sigma_3 + omega a†a + lambda (a† sigma_- + sigma_+ a).
LinOp hamiltonian_full(const JcmParams& p, const Cutoff& c);

// H_I = lambda (a† sigma_- + sigma_+ a). Annihilates |g,0> and, through the
// hard cutoff, the flagged |e, n_max> state.
LinOp hamiltonian_interaction(const JcmParams& p, const Cutoff& c);

// N = sigma_+ sigma_- + a†a, diagonal with integer spectrum.
LinOp excitation_number(const Cutoff& c);

struct NumberShiftOps {
    LinOp E;      // Σ |n><n+1| ⊗ I_atom
    LinOp E_dag;
};

NumberShiftOps susskind_glogower(const Cutoff& c);

// Anti-Hermitian generator O with O|g,n> = ½|e,n-1>, O|e,n> = -½|g,n+1>.
// Canonical form ½(sigma_+ E - E† sigma_-); entries are exactly ±1/2.
LinOp generator(const Cutoff& c);

// Same operator assembled as sigma_+ f(a†a) a - a† f(a†a) sigma_- with
// f(n) = ½(n+1)^(-1/2).
LinOp generator_number_form(const Cutoff& c);

// Same operator assembled as (2√N)^(-1) (sigma_+ a - a† sigma_-) with the
// pseudo-inverse convention 0 ↦ 0 on the excitation-0 sector.
LinOp generator_inverse_root_form(const Cutoff& c);

// Residuals for the commutator of the generator with H_I against its
// closed form lambda (sigma_+ sigma_- √(aa†) - sigma_- sigma_+ √(a†a)),
// max-norm over the physical subspace, plus the bare-basis eigenactions
// [O,H_I]|g,n> = -lambda√n |g,n>, [O,H_I]|e,n-1> = +lambda√n |e,n-1>.
struct CommutatorReport {
    double identity_residual;
    double eigenaction_residual;
    double ground_residual;      // action on |g,0>

    double max_residual() const {
        return std::max({identity_residual, eigenaction_residual, ground_residual});
    }
};

CommutatorReport commutator_check(const Cutoff& c, const JcmParams& p);

namespace detail {

// Shared entry formulas. The dense constructors and the per-sector block
// constructors both evaluate these, which is what makes their outputs
// bit-identical.

double interaction_coupling(const JcmParams& p, int total_excitation);
double full_diagonal(const JcmParams& p, const BareLabel& label);

} // namespace detail

} // namespace jcm::model
