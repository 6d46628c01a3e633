#include "jcm/model.hpp"

#include <doctest.h>

#include <cmath>

using namespace jcm;

namespace {

const model::JcmParams kParams(10.0, 1.0);

} // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(model::JcmParams(10.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(model::JcmParams(10.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(model::JcmParams(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("full Hamiltonian entries") {
    const Cutoff c(8);
    const LinOp h = model::hamiltonian_full(kParams, c);

    CHECK(h.mat(0, 0).real() == -5.0);  // <g,0|H|g,0> = -omega/2
    const int ie0 = BareLabel{Atom::e, 0}.index();
    const int ig1 = BareLabel{Atom::g, 1}.index();
    CHECK(h.mat(ie0, ig1).real() == 1.0);  // coupling lambda

    // Definition consistency: H equals the sum of its three terms. At these
    // parameters every entry is exactly representable, so the residual is 0.
    const auto ops = space::ladder_ops(c);
    const Matrix rebuilt = (0.5 * kParams.omega) * ops.sigma_3.mat +
                           kParams.omega * space::photon_number(c).mat +
                           model::hamiltonian_interaction(kParams, c).mat;
    CHECK(space::max_norm(h.mat - rebuilt) == 0.0);

    // The product a†a agrees with the exact-diagonal photon number.
    CHECK(space::max_norm(ops.a_dag * ops.a - space::photon_number(c)) <= 1e-12);
    CHECK(space::max_norm(h - h.adjoint()) == 0.0);
}

TEST_CASE("interaction Hamiltonian eigenstructure") {
    const Cutoff c(8);
    const LinOp hi = model::hamiltonian_interaction(kParams, c);

    CHECK((hi * space::basis_ket({Atom::g, 0}, c)).amp.norm() == 0.0);

    for (int n = 1; n <= 4; ++n) {
        const double w = kParams.lambda * std::sqrt(static_cast<double>(n));
        for (double sign : {1.0, -1.0}) {
            Vector v = Vector::Zero(c.dim());
            v(BareLabel{Atom::e, n - 1}.index()) = kInvSqrt2;
            v(BareLabel{Atom::g, n}.index()) = sign * kInvSqrt2;
            CHECK(((hi.mat * v) - sign * w * v).norm() <= 1e-12);
        }
    }

    // Spectrum on the N = 2 sector is ±lambda √2.
    Eigen::Matrix2cd block;
    const int ie1 = BareLabel{Atom::e, 1}.index();
    const int ig2 = BareLabel{Atom::g, 2}.index();
    block << hi.mat(ie1, ie1), hi.mat(ie1, ig2), hi.mat(ig2, ie1), hi.mat(ig2, ig2);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> s(block);
    CHECK(s.eigenvalues()(0) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
    CHECK(s.eigenvalues()(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("excitation number") {
    const Cutoff c(8);
    const LinOp n = model::excitation_number(c);

    CHECK((n * space::basis_ket({Atom::g, 0}, c)).amp.norm() == 0.0);
    const Ket e3 = space::basis_ket({Atom::e, 3}, c);
    CHECK(((n * e3).amp - 4.0 * e3.amp).norm() == 0.0);

    const LinOp hi = model::hamiltonian_interaction(kParams, c);
    CHECK(space::physical_max_norm(n * hi - hi * n, c) == 0.0);

    // N = sigma_+ sigma_- + a†a as a product identity.
    const auto ops = space::ladder_ops(c);
    CHECK(space::max_norm(ops.sigma_plus * ops.sigma_minus + ops.a_dag * ops.a - n) <= 1e-12);
}

TEST_CASE("number-shift operators") {
    const Cutoff c(8);
    const auto [E, E_dag] = model::susskind_glogower(c);

    const Ket g1 = space::basis_ket({Atom::g, 1}, c);
    const Ket g0 = space::basis_ket({Atom::g, 0}, c);
    CHECK(((E * g1).amp - g0.amp).norm() == 0.0);
    CHECK((E * g0).amp.norm() == 0.0);

    // E E† = I on rows untouched by the cutoff.
    const Matrix prod = E.mat * E_dag.mat;
    for (int i = 0; i < c.dim() - 2; ++i) {
        for (int j = 0; j < c.dim() - 2; ++j) {
            CHECK(std::abs(prod(i, j) - (i == j ? 1.0 : 0.0)) == 0.0);
        }
    }
}

TEST_CASE("generator: three constructions, square, and action") {
    const Cutoff c(8);
    const LinOp gen = model::generator(c);

    // O|g,0> = 0 and O|g,1> = ½|e,0>.
    CHECK((gen * space::basis_ket({Atom::g, 0}, c)).amp.norm() == 0.0);
    const Vector image = (gen * space::basis_ket({Atom::g, 1}, c)).amp;
    Vector expected = Vector::Zero(c.dim());
    expected(BareLabel{Atom::e, 0}.index()) = 0.5;
    CHECK((image - expected).norm() == 0.0);

    CHECK(space::max_norm(gen + gen.adjoint()) == 0.0);

    CHECK(space::physical_max_norm(model::generator_number_form(c) - gen, c) <= 1e-12);
    CHECK(space::physical_max_norm(model::generator_inverse_root_form(c) - gen, c) <= 1e-12);

    // O² = -(I - |g,0><g,0|)/4 away from the flagged state.
    Matrix target = -0.25 * Matrix::Identity(c.dim(), c.dim());
    target(0, 0) = 0.0;
    CHECK(space::physical_max_norm(gen.mat * gen.mat - target, c) == 0.0);

    // O commutes with the excitation number.
    const LinOp n = model::excitation_number(c);
    CHECK(space::max_norm(n * gen - gen * n) == 0.0);
}

TEST_CASE("commutator of the generator with the interaction") {
    const Cutoff c(8);
    const auto report = model::commutator_check(c, kParams);
    CHECK(report.identity_residual <= 1e-12);
    CHECK(report.eigenaction_residual <= 1e-12);
    CHECK(report.ground_residual == 0.0);
}

TEST_CASE("everything holds at the minimal cutoff") {
    const Cutoff c(1);
    const auto report = model::commutator_check(c, kParams);
    CHECK(report.max_residual() <= 1e-12);
    CHECK(space::physical_max_norm(model::generator_number_form(c) - model::generator(c), c) <=
          1e-12);
}
