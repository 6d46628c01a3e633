// dressed.hpp — The diagonalizing unitary, the diagonal Hamiltonians, the
// dressed basis and dressed ladder operators, and the exact decomposition of
// excitation-preserving operators into 1x1/2x2 sector blocks.

#pragma once

#include "jcm/model.hpp"

#include <vector>

namespace jcm::dressed {

// Dressed labels in output order: (0,+), (1,+), (1,-), (2,+), (2,-), ...
// interleaved by excitation. 2*n_max + 1 labels; the flagged |e, n_max>
// state is not a dressed label.
std::vector<DressedLabel> dressed_labels(const Cutoff& c);

// |n,±> = (|e,n-1> ± |g,n>)/√2 for n >= 1; |0,+> = |g,0>.
Ket dressed_ket(const DressedLabel& label, const Cutoff& c);

// Columns are the dressed kets in output order, with the flagged |e, n_max>
// state appended as the last column. Unitary change of frame.
Matrix dressed_basis_matrix(const Cutoff& c);

// M expressed in the dressed frame (dressed_basis_matrix conjugation).
Matrix to_dressed_frame(const Matrix& m, const Cutoff& c);

// Max-norm of the dressed-frame block with both indices on dressed labels of
// excitation < n_max. The commutator of the dressed ladder pair is the
// identity exactly on this interior; the boundary rows touch the cutoff.
double interior_max_norm(const Matrix& m, const Cutoff& c);

// The unitary that maps bare to dressed states: U|g,n> = |n,+>,
// U|e,n> = |n+1,->, U|g,0> = |g,0>. Assembled from the closed form
// (I - P0 + 2O)/√2 + P0 with P0 = |g,0><g,0|; on the flagged |e, n_max>
// state, which has no partner under the cutoff, U is defined as the
// identity, which keeps it unitary on the whole truncated space.
LinOp unitary(const Cutoff& c);

// Cross-check construction: scaling-and-squaring matrix exponential of
// (π/2)·generator. Agrees with unitary() within 1e-10.
LinOp unitary_via_exponential(const Cutoff& c);

// H_ID = lambda √N sigma_3, diagonal in the bare basis. Equals U H_I U† on
// the physical subspace.
LinOp diagonal_interaction(const model::JcmParams& p, const Cutoff& c);

// H_D = omega N + lambda √N sigma_3. Spectrum {0} ∪ {omega n ± lambda √n}
// on the physical subspace.
LinOp diagonal_full(const model::JcmParams& p, const Cutoff& c);

// Closed-form dressed energy omega*N ± lambda*√N.
double dressed_energy(const model::JcmParams& p, int total_excitation, Parity parity);

// Explicit dressed annihilation operator
//   Σ √n |n-1,+><n,+| + Σ √(n-1) |n-1,-><n,-|,
// assembled from exact dyadic entries. Equals U a U† on the physical
// subspace; the conjugated form additionally carries the truncation
// completion on the flagged column.
LinOp dressed_annihilation(const Cutoff& c);

// Explicit dressed atom lowering operator Σ |n,+><n+1,-|, entries exactly
// ±1/2. Squares to zero exactly; equals U sigma_- U† on the physical
// subspace.
LinOp dressed_lowering(const Cutoff& c);

// U X U†.
LinOp conjugated(const LinOp& x, const LinOp& u);

// One excitation sector of an excitation-preserving operator. For N >= 1 the
// basis is the ordered pair (|e,N-1>, |g,N>); N = 0 is the singleton |g,0>.
// The flagged |e, n_max> state forms its own artifact sector N = n_max + 1.
struct ExcitationBlock {
    int  total_excitation;
    bool truncation_artifact;
    int  size;
    std::array<int, 2> bare_indices;  // flat indices; second unused when size == 1
    Eigen::Matrix2cd   block;         // top-left size x size entries are valid

    Complex at(int r, int s) const { return block(r, s); }
};

// Exact sector decomposition. Throws BlockStructureError (naming the largest
// off-block magnitude) when the operator does not commute with N within 1e-12.
std::vector<ExcitationBlock> block_decompose(const LinOp& op, const Cutoff& c);

// Scatter blocks back into a dense operator; inverse of block_decompose
// bit-for-bit.
LinOp assemble(const std::vector<ExcitationBlock>& blocks, const Cutoff& c);

// Per-sector constructors, entry-identical to the dense builders.
std::vector<ExcitationBlock> interaction_blocks(const model::JcmParams& p, const Cutoff& c);
std::vector<ExcitationBlock> full_hamiltonian_blocks(const model::JcmParams& p, const Cutoff& c);
std::vector<ExcitationBlock> excitation_number_blocks(const Cutoff& c);
std::vector<ExcitationBlock> unitary_blocks(const Cutoff& c);
std::vector<ExcitationBlock> diagonal_interaction_blocks(const model::JcmParams& p, const Cutoff& c);
std::vector<ExcitationBlock> diagonal_full_blocks(const model::JcmParams& p, const Cutoff& c);

} // namespace jcm::dressed
