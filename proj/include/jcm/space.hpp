// space.hpp — Truncated Hilbert-space kernel: basis states, ladder operators,
// spectral functions of diagonal operators, partial trace, subspace norms.

#pragma once

#include "jcm/types.hpp"

#include <functional>

namespace jcm::space {

// Unit vector for a bare product state. Throws std::out_of_range when the
// photon number exceeds the cutoff.
Ket basis_ket(const BareLabel& label, const Cutoff& c);

struct LadderOps {
    LinOp a;            // field annihilation, hard cutoff: a†|·,n_max> = 0
    LinOp a_dag;
    LinOp sigma_minus;  // |g><e| ⊗ field identity
    LinOp sigma_plus;
    LinOp sigma_3;      // |e><e| - |g><g| ⊗ field identity
};

LadderOps ladder_ops(const Cutoff& c);

LinOp identity(const Cutoff& c);

// Field photon-number operator n̂ ⊗ I_atom with exact integer diagonal; this is
// the value of a†a on the truncated space.
LinOp photon_number(const Cutoff& c);

// Applies h eigenvalue-wise to an operator that is diagonal in the bare basis
// with a nonnegative-integer spectrum (both checked within 1e-12). h is only
// evaluated on the integers actually present on the diagonal.
LinOp spectral_fn(const std::function<double(long)>& h, const LinOp& diag_op);

// Reduced atom state of a normalized ket: the partial trace over the field,
// in (g, e) ordering. Throws when |<ψ|ψ> - 1| exceeds 1e-9.
Eigen::Matrix2cd reduced_atom_state(const Ket& ket);

// Sequential inner product <a|b>. Summation runs in flat-index order so that
// structurally cancelling contributions cancel exactly.
Complex overlap(const Ket& a, const Ket& b);

double max_norm(const Matrix& m);
inline double max_norm(const LinOp& op) { return max_norm(op.mat); }

// Max-norm with the flagged |e, n_max> row and column masked out: the metric
// for identities that hold on the physical subspace only.
double physical_max_norm(const Matrix& m, const Cutoff& c);
inline double physical_max_norm(const LinOp& op, const Cutoff& c) {
    return physical_max_norm(op.mat, c);
}

// The (D-1)x(D-1) restriction dropping the flagged |e, n_max> row/column.
Matrix physical_restriction(const Matrix& m, const Cutoff& c);

} // namespace jcm::space
