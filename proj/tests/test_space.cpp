#include "jcm/space.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace jcm;

TEST_CASE("cutoff validation and dimensions") {
    CHECK_THROWS_AS(Cutoff(0), std::invalid_argument);
    CHECK_THROWS_AS(Cutoff(-3), std::invalid_argument);
    const Cutoff c(3);
    CHECK(c.dim() == 8);
    CHECK(c.unsafe_index() == 7);
}

TEST_CASE("basis indexing convention") {
    const Cutoff c(3);
    const Ket g0 = space::basis_ket({Atom::g, 0}, c);
    CHECK(g0.amp(0) == Complex(1.0, 0.0));
    CHECK(g0.amp.tail(7).norm() == 0.0);

    const Ket e2 = space::basis_ket({Atom::e, 2}, c);
    CHECK(e2.amp(5) == Complex(1.0, 0.0));

    CHECK_THROWS_AS(space::basis_ket({Atom::e, 4}, c), std::out_of_range);
    CHECK_THROWS_AS(space::basis_ket({Atom::g, -1}, c), std::out_of_range);
}

TEST_CASE("indexing round-trip covers the whole space") {
    const Cutoff c(9);
    for (int i = 0; i < c.dim(); ++i) {
        CHECK(BareLabel::from_index(i).index() == i);
    }
    CHECK(BareLabel{Atom::e, 2}.excitation() == 3);
    CHECK(BareLabel{Atom::g, 2}.excitation() == 2);
}

TEST_CASE("ladder operators act as annihilation/creation") {
    const Cutoff c(8);
    const auto ops = space::ladder_ops(c);

    const Ket g1 = space::basis_ket({Atom::g, 1}, c);
    const Ket g0 = space::basis_ket({Atom::g, 0}, c);
    CHECK(((ops.a * g1).amp - g0.amp).norm() == 0.0);

    const Ket e5 = space::basis_ket({Atom::e, 5}, c);
    CHECK(((ops.sigma_3 * e5).amp - e5.amp).norm() == 0.0);

    // a† is the stored adjoint, and the hard cutoff kills the top state.
    CHECK(space::max_norm(ops.a_dag.mat - ops.a.mat.adjoint()) == 0.0);
    CHECK((ops.a_dag * space::basis_ket({Atom::g, 8}, c)).amp.norm() == 0.0);

    // [a, a†] = I on photon numbers below the cutoff.
    const Matrix comm = ops.a.mat * ops.a_dag.mat - ops.a_dag.mat * ops.a.mat;
    for (int i = 0; i < c.dim() - 2; ++i) {
        for (int j = 0; j < c.dim() - 2; ++j) {
            CHECK(std::abs(comm(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-12);
        }
    }
}

TEST_CASE("spectral_fn applies eigenvalue-wise on the integer spectrum") {
    const Cutoff c(6);
    const auto ops = space::ladder_ops(c);
    const LinOp num = ops.a_dag * ops.a;

    SUBCASE("f(n) = (n+1)^{-1/2}/2 hits 1/2 at the vacuum") {
        const LinOp f = space::spectral_fn(
            [](long n) { return 0.5 / std::sqrt(static_cast<double>(n + 1)); }, num);
        CHECK(f.mat(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(f.mat(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    }

    SUBCASE("identity map leaves the exact-integer operator unchanged") {
        const LinOp n_direct = space::photon_number(c);
        const LinOp mapped =
            space::spectral_fn([](long n) { return static_cast<double>(n); }, n_direct);
        CHECK(space::max_norm(mapped - n_direct) == 0.0);
    }

    SUBCASE("pseudo-inverse square root matches an eigendecomposition oracle") {
        auto h = [](long n) { return n == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(n)); };
        const LinOp via_fn = space::spectral_fn(h, num);

        // Oracle: full Hermitian eigensolve, map eigenvalues, reassemble.
        Eigen::SelfAdjointEigenSolver<Matrix> solver(num.mat);
        Eigen::VectorXd mapped = solver.eigenvalues();
        for (int i = 0; i < mapped.size(); ++i) {
            const double x = mapped(i);
            mapped(i) = x < 0.5 ? 0.0 : 1.0 / std::sqrt(std::round(x));
        }
        const Matrix oracle = solver.eigenvectors() * mapped.asDiagonal() *
                              solver.eigenvectors().adjoint();
        CHECK(space::max_norm(via_fn.mat - oracle) <= 1e-12);
        // Kernel preserved.
        CHECK(std::abs(via_fn.mat(0, 0)) == 0.0);
        CHECK(std::abs(via_fn.mat(1, 1)) == 0.0);
    }

    SUBCASE("non-diagonal input is a contract violation") {
        CHECK_THROWS_AS(space::spectral_fn([](long n) { return double(n); }, ops.a),
                        std::invalid_argument);
    }

    SUBCASE("negative spectrum is rejected") {
        LinOp neg = space::photon_number(c);
        neg.mat(0, 0) = -1.0;
        CHECK_THROWS_AS(space::spectral_fn([](long n) { return double(n); }, neg),
                        std::invalid_argument);
    }
}

TEST_CASE("reduced atom state") {
    const Cutoff c(4);

    SUBCASE("product state") {
        const auto rho = space::reduced_atom_state(space::basis_ket({Atom::g, 0}, c));
        CHECK(std::abs(rho(0, 0) - 1.0) == 0.0);
        CHECK(std::abs(rho(1, 1)) == 0.0);
    }

    SUBCASE("maximally entangled pair") {
        Vector v = Vector::Zero(c.dim());
        v(BareLabel{Atom::g, 1}.index()) = kInvSqrt2;
        v(BareLabel{Atom::e, 0}.index()) = kInvSqrt2;
        const auto rho = space::reduced_atom_state(Ket{v});
        CHECK(std::abs(rho(0, 0) - 0.5) <= 1e-12);
        CHECK(std::abs(rho(1, 1) - 0.5) <= 1e-12);
        CHECK(std::abs(rho(0, 1)) <= 1e-12);
    }

    SUBCASE("unnormalized input is rejected") {
        Vector v = Vector::Zero(c.dim());
        v(0) = 2.0;
        CHECK_THROWS_AS(space::reduced_atom_state(Ket{v}), std::invalid_argument);
    }

    SUBCASE("partial trace preserves the norm on random kets") {
        std::mt19937 rng(7);
        std::normal_distribution<double> dist;
        for (int trial = 0; trial < 20; ++trial) {
            Vector v(c.dim());
            for (int i = 0; i < c.dim(); ++i) v(i) = Complex(dist(rng), dist(rng));
            v /= v.norm();
            const auto rho = space::reduced_atom_state(Ket{v});
            CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-12);
            // Hermitian, positive.
            CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> s(rho);
            CHECK(s.eigenvalues()(0) >= -1e-10);
        }
    }
}

TEST_CASE("physical masking removes exactly the flagged row and column") {
    const Cutoff c(2);
    Matrix m = Matrix::Zero(c.dim(), c.dim());
    m(c.unsafe_index(), 0) = 5.0;
    m(1, c.unsafe_index()) = 7.0;
    CHECK(space::max_norm(m) == 7.0);
    CHECK(space::physical_max_norm(m, c) == 0.0);
    CHECK(space::physical_restriction(m, c).cwiseAbs().maxCoeff() == 0.0);
}
