#include "jcm/dressed.hpp"

#include <doctest.h>

#include <cmath>

using namespace jcm;

namespace {

const model::JcmParams kParams(10.0, 1.0);

} // namespace

TEST_CASE("dressed labels and kets") {
    const Cutoff c(6);

    CHECK_THROWS_AS(DressedLabel(0, Parity::minus), std::invalid_argument);
    CHECK_THROWS_AS(DressedLabel(-1, Parity::plus), std::invalid_argument);

    const auto labels = dressed::dressed_labels(c);
    CHECK(labels.size() == 13);
    CHECK(labels[0].n == 0);
    CHECK(labels[1].n == 1);
    CHECK(labels[1].parity == Parity::plus);
    CHECK(labels[2].n == 1);
    CHECK(labels[2].parity == Parity::minus);

    // (1,+) = (|e,0> + |g,1>)/√2.
    const Ket one_plus = dressed::dressed_ket(DressedLabel(1, Parity::plus), c);
    CHECK(one_plus.amp(BareLabel{Atom::e, 0}.index()).real() == kInvSqrt2);
    CHECK(one_plus.amp(BareLabel{Atom::g, 1}.index()).real() == kInvSqrt2);

    // (0,+) is the bare ground state.
    const Ket zero_plus = dressed::dressed_ket(DressedLabel(0, Parity::plus), c);
    CHECK((zero_plus.amp - space::basis_ket({Atom::g, 0}, c).amp).norm() == 0.0);

    // Orthonormal within each sector.
    for (int n = 1; n <= 5; ++n) {
        const Ket plus = dressed::dressed_ket(DressedLabel(n, Parity::plus), c);
        const Ket minus = dressed::dressed_ket(DressedLabel(n, Parity::minus), c);
        CHECK(std::abs(space::overlap(plus, minus)) == 0.0);
        CHECK(std::abs(space::overlap(plus, plus).real() - 1.0) <= 1e-15);
    }

    CHECK_THROWS_AS(dressed::dressed_ket(DressedLabel(7, Parity::plus), c), std::out_of_range);
}

TEST_CASE("unitary maps bare states onto the dressed basis") {
    const Cutoff c(8);
    const LinOp u = dressed::unitary(c);
    const LinOp id = space::identity(c);

    CHECK(space::max_norm(u.mat.adjoint() * u.mat - id.mat) <= 1e-12);
    CHECK(space::max_norm(u.mat * u.mat.adjoint() - id.mat) <= 1e-12);

    const Ket g0 = space::basis_ket({Atom::g, 0}, c);
    CHECK(((u * g0).amp - g0.amp).norm() == 0.0);

    for (int n = 1; n <= 4; ++n) {
        const Ket got{(u * space::basis_ket({Atom::g, n}, c)).amp};
        const Ket want = dressed::dressed_ket(DressedLabel(n, Parity::plus), c);
        CHECK((got.amp - want.amp).norm() == 0.0);
    }
    for (int n = 0; n <= 3; ++n) {
        const Ket got{(u * space::basis_ket({Atom::e, n}, c)).amp};
        const Ket want = dressed::dressed_ket(DressedLabel(n + 1, Parity::minus), c);
        CHECK((got.amp - want.amp).norm() == 0.0);
    }

    // Identity on the flagged state keeps U unitary on the whole space.
    const Ket top = space::basis_ket({Atom::e, c.n_max}, c);
    CHECK(((u * top).amp - top.amp).norm() == 0.0);
}

TEST_CASE("closed form agrees with the matrix exponential") {
    for (int n_max : {1, 2, 8, 32}) {
        const Cutoff c(n_max);
        CHECK(space::max_norm(dressed::unitary(c) - dressed::unitary_via_exponential(c)) <=
              1e-10);
    }
}

TEST_CASE("diagonalization identity") {
    const Cutoff c(8);
    const LinOp u = dressed::unitary(c);
    const LinOp hi = model::hamiltonian_interaction(kParams, c);
    const LinOp hid = dressed::diagonal_interaction(kParams, c);

    CHECK(space::physical_max_norm(u.mat * hi.mat * u.mat.adjoint() - hid.mat, c) <= 1e-12);

    for (int n = 0; n <= 4; ++n) {
        const Ket g = space::basis_ket({Atom::g, n}, c);
        const double w = kParams.lambda * std::sqrt(static_cast<double>(n));
        CHECK(((hid * g).amp + w * g.amp).norm() <= 1e-12);
    }
    for (int n = 1; n <= 4; ++n) {
        const Ket e = space::basis_ket({Atom::e, n - 1}, c);
        const double w = kParams.lambda * std::sqrt(static_cast<double>(n));
        CHECK(((hid * e).amp - w * e.amp).norm() <= 1e-12);
    }

    // Spectral-function route builds the same operator.
    const LinOp root_n = space::spectral_fn(
        [](long n) { return std::sqrt(static_cast<double>(n)); }, model::excitation_number(c));
    const auto s3 = space::ladder_ops(c).sigma_3;
    CHECK(space::max_norm(kParams.lambda * (root_n.mat * s3.mat) - hid.mat) <= 1e-12);
}

TEST_CASE("full diagonal Hamiltonian spectrum") {
    const Cutoff c(10);
    const LinOp hd = dressed::diagonal_full(kParams, c);

    // Ground eigenvalue 0; the N = 1 pair sits at omega ± lambda.
    CHECK(std::abs(hd.mat(0, 0)) == 0.0);
    CHECK(dressed::dressed_energy(kParams, 1, Parity::plus) == 11.0);
    CHECK(dressed::dressed_energy(kParams, 1, Parity::minus) == 9.0);

    // Sorted closed form against a dense eigensolve of U† H_D U.
    const LinOp u = dressed::unitary(c);
    const Matrix h_bare = u.mat.adjoint() * hd.mat * u.mat;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(space::physical_restriction(h_bare, c));
    std::vector<double> closed;
    closed.push_back(0.0);
    for (int n = 1; n <= c.n_max; ++n) {
        closed.push_back(dressed::dressed_energy(kParams, n, Parity::plus));
        closed.push_back(dressed::dressed_energy(kParams, n, Parity::minus));
    }
    std::sort(closed.begin(), closed.end());
    for (int i = 0; i < static_cast<int>(closed.size()); ++i) {
        CHECK(std::abs(solver.eigenvalues()(i) - closed[i]) <= 1e-10);
    }
}

TEST_CASE("dressed annihilation operator") {
    const Cutoff c(8);
    const LinOp a_d = dressed::dressed_annihilation(c);
    const LinOp u = dressed::unitary(c);
    const LinOp a_d_conj = dressed::conjugated(space::ladder_ops(c).a, u);

    CHECK(space::physical_max_norm(a_d - a_d_conj, c) <= 1e-12);

    for (int n = 1; n <= 4; ++n) {
        const Ket from = dressed::dressed_ket(DressedLabel(n, Parity::plus), c);
        const Ket to = dressed::dressed_ket(DressedLabel(n - 1, Parity::plus), c);
        CHECK(((a_d * from).amp - std::sqrt(double(n)) * to.amp).norm() <= 1e-12);
    }
    CHECK((a_d * dressed::dressed_ket(DressedLabel(1, Parity::minus), c)).amp.norm() == 0.0);
    for (int n = 2; n <= 4; ++n) {
        const Ket from = dressed::dressed_ket(DressedLabel(n, Parity::minus), c);
        const Ket to = dressed::dressed_ket(DressedLabel(n - 1, Parity::minus), c);
        CHECK(((a_d * from).amp - std::sqrt(double(n - 1)) * to.amp).norm() <= 1e-12);
    }

    // [a_D, a_D†] = I on the interior; the defect lives on the boundary.
    const LinOp id = space::identity(c);
    const Matrix comm = a_d_conj.mat * a_d_conj.mat.adjoint() -
                        a_d_conj.mat.adjoint() * a_d_conj.mat - id.mat;
    CHECK(dressed::interior_max_norm(comm, c) <= 1e-12);
    const Matrix comm_explicit =
        a_d.mat * a_d.mat.adjoint() - a_d.mat.adjoint() * a_d.mat - id.mat;
    CHECK(dressed::interior_max_norm(comm_explicit, c) <= 1e-12);
}

TEST_CASE("dressed lowering operator") {
    const Cutoff c(8);
    const LinOp s_d = dressed::dressed_lowering(c);
    const LinOp u = dressed::unitary(c);
    const LinOp s_d_conj = dressed::conjugated(space::ladder_ops(c).sigma_minus, u);

    CHECK(space::physical_max_norm(s_d - s_d_conj, c) <= 1e-12);
    CHECK(space::max_norm(s_d * s_d) == 0.0);

    for (int n = 0; n <= 3; ++n) {
        const Ket from = dressed::dressed_ket(DressedLabel(n + 1, Parity::minus), c);
        const Ket to = dressed::dressed_ket(DressedLabel(n, Parity::plus), c);
        CHECK(((s_d * from).amp - to.amp).norm() <= 1e-12);
        CHECK((s_d * to).amp.norm() <= 1e-12);
    }

    // Anticommutation closes on the whole truncated space for the conjugated
    // pair (the flagged state supplies the missing partner of |n_max,+>).
    const LinOp id = space::identity(c);
    CHECK(space::max_norm(s_d_conj.mat * s_d_conj.mat.adjoint() +
                          s_d_conj.mat.adjoint() * s_d_conj.mat - id.mat) <= 1e-12);

    // The explicit sums close on the interior.
    const Matrix anti =
        s_d.mat * s_d.mat.adjoint() + s_d.mat.adjoint() * s_d.mat - id.mat;
    CHECK(dressed::interior_max_norm(anti, c) <= 1e-12);
}

TEST_CASE("excitation number is invariant under the transformation") {
    const Cutoff c(8);
    const LinOp u = dressed::unitary(c);
    const LinOp n = model::excitation_number(c);

    // Exact commutation, entry by entry.
    CHECK(space::max_norm(u * n - n * u) == 0.0);
    CHECK(space::max_norm(dressed::conjugated(n, u) - n) <= 1e-12);

    // sigma_+D sigma_-D + a_D† a_D reproduces N on the physical subspace.
    const LinOp a_d = dressed::dressed_annihilation(c);
    const LinOp s_d = dressed::dressed_lowering(c);
    CHECK(space::physical_max_norm(
              s_d.mat.adjoint() * s_d.mat + a_d.mat.adjoint() * a_d.mat - n.mat, c) <= 1e-12);
}

TEST_CASE("block decomposition") {
    const Cutoff c(8);
    const LinOp hi = model::hamiltonian_interaction(kParams, c);

    SUBCASE("sector content and reassembly") {
        const auto blocks = dressed::block_decompose(hi, c);
        CHECK(blocks.size() == static_cast<std::size_t>(c.n_max + 2));

        CHECK(blocks[0].size == 1);
        CHECK(blocks[0].block(0, 0) == Complex(0.0, 0.0));

        // N = 1 sector in basis (|e,0>, |g,1>) is lambda * sigma_x.
        CHECK(blocks[1].size == 2);
        CHECK(blocks[1].block(0, 1).real() == kParams.lambda);
        CHECK(blocks[1].block(1, 0).real() == kParams.lambda);
        CHECK(blocks[1].block(0, 0) == Complex(0.0, 0.0));

        CHECK(blocks.back().truncation_artifact);
        CHECK(blocks.back().size == 1);

        CHECK(space::max_norm(dressed::assemble(blocks, c) - hi) == 0.0);
    }

    SUBCASE("the unitary's N = 1 block is the quarter rotation") {
        const auto blocks = dressed::block_decompose(dressed::unitary(c), c);
        CHECK(blocks[1].block(0, 0).real() == kInvSqrt2);
        CHECK(blocks[1].block(0, 1).real() == kInvSqrt2);
        CHECK(blocks[1].block(1, 0).real() == -kInvSqrt2);
        CHECK(blocks[1].block(1, 1).real() == kInvSqrt2);
    }

    SUBCASE("operators that change N are refused with the offending magnitude") {
        try {
            dressed::block_decompose(dressed::dressed_annihilation(c), c);
            FAIL("expected BlockStructureError");
        } catch (const BlockStructureError& e) {
            CHECK(e.max_off_block > 0.5);
        }
    }
}

TEST_CASE("block constructors match the dense constructors bit for bit") {
    for (int n_max : {1, 8}) {
        const Cutoff c(n_max);
        CHECK(space::max_norm(dressed::assemble(dressed::interaction_blocks(kParams, c), c) -
                              model::hamiltonian_interaction(kParams, c)) == 0.0);
        CHECK(space::max_norm(dressed::assemble(dressed::full_hamiltonian_blocks(kParams, c), c) -
                              model::hamiltonian_full(kParams, c)) == 0.0);
        CHECK(space::max_norm(dressed::assemble(dressed::excitation_number_blocks(c), c) -
                              model::excitation_number(c)) == 0.0);
        CHECK(space::max_norm(dressed::assemble(dressed::unitary_blocks(c), c) -
                              dressed::unitary(c)) == 0.0);
        CHECK(space::max_norm(
                  dressed::assemble(dressed::diagonal_interaction_blocks(kParams, c), c) -
                  dressed::diagonal_interaction(kParams, c)) == 0.0);
        CHECK(space::max_norm(dressed::assemble(dressed::diagonal_full_blocks(kParams, c), c) -
                              dressed::diagonal_full(kParams, c)) == 0.0);
    }
}
