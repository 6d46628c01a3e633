#include "jcm/model.hpp"

#include <cmath>

namespace jcm::model {

namespace detail {

double interaction_coupling(const JcmParams& p, int total_excitation) {
    return p.lambda * std::sqrt(static_cast<double>(total_excitation));
}

double full_diagonal(const JcmParams& p, const BareLabel& label) {
    const double sign = (label.atom == Atom::e) ? 1.0 : -1.0;
    return sign * (0.5 * p.omega) + p.omega * static_cast<double>(label.n);
}

} // namespace detail

LinOp hamiltonian_full(const JcmParams& p, const Cutoff& c) {
    const int d = c.dim();
    Matrix m = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        m(i, i) = detail::full_diagonal(p, BareLabel::from_index(i));
    }
    for (int n = 1; n <= c.n_max; ++n) {
        const double g = detail::interaction_coupling(p, n);
        m(2 * (n - 1) + 1, 2 * n) = g;  // <e,n-1| H |g,n>
        m(2 * n, 2 * (n - 1) + 1) = g;
    }
    return LinOp{std::move(m), true};
}

LinOp hamiltonian_interaction(const JcmParams& p, const Cutoff& c) {
    const int d = c.dim();
    Matrix m = Matrix::Zero(d, d);
    for (int n = 1; n <= c.n_max; ++n) {
        const double g = detail::interaction_coupling(p, n);
        m(2 * (n - 1) + 1, 2 * n) = g;
        m(2 * n, 2 * (n - 1) + 1) = g;
    }
    return LinOp{std::move(m), true};
}

LinOp excitation_number(const Cutoff& c) {
    const int d = c.dim();
    Matrix m = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        m(i, i) = static_cast<double>(BareLabel::from_index(i).excitation());
    }
    return LinOp{std::move(m), true};
}

NumberShiftOps susskind_glogower(const Cutoff& c) {
    const int d = c.dim();
    Matrix e = Matrix::Zero(d, d);
    for (int n = 0; n < c.n_max; ++n) {
        for (int s = 0; s < 2; ++s) {
            e(2 * n + s, 2 * (n + 1) + s) = 1.0;
        }
    }
    LinOp e_op{std::move(e), false};
    return NumberShiftOps{e_op, e_op.adjoint()};
}

LinOp generator(const Cutoff& c) {
    auto [E, E_dag] = susskind_glogower(c);
    auto ops = space::ladder_ops(c);
    Matrix m = 0.5 * (ops.sigma_plus.mat * E.mat - E_dag.mat * ops.sigma_minus.mat);
    return LinOp{std::move(m), false};
}

LinOp generator_number_form(const Cutoff& c) {
    auto ops = space::ladder_ops(c);
    const LinOp num = ops.a_dag * ops.a;
    const LinOp f = space::spectral_fn(
        [](long n) { return 0.5 / std::sqrt(static_cast<double>(n + 1)); }, num);
    Matrix m = ops.sigma_plus.mat * f.mat * ops.a.mat - ops.a_dag.mat * f.mat * ops.sigma_minus.mat;
    return LinOp{std::move(m), false};
}

LinOp generator_inverse_root_form(const Cutoff& c) {
    auto ops = space::ladder_ops(c);
    const LinOp inv_root = space::spectral_fn(
        [](long n) { return n == 0 ? 0.0 : 0.5 / std::sqrt(static_cast<double>(n)); },
        excitation_number(c));
    Matrix m = inv_root.mat * (ops.sigma_plus.mat * ops.a.mat - ops.a_dag.mat * ops.sigma_minus.mat);
    return LinOp{std::move(m), false};
}

CommutatorReport commutator_check(const Cutoff& c, const JcmParams& p) {
    auto ops = space::ladder_ops(c);
    const LinOp O = generator(c);
    const LinOp Hi = hamiltonian_interaction(p, c);
    const Matrix comm = O.mat * Hi.mat - Hi.mat * O.mat;

    const LinOp aa_dag = ops.a * ops.a_dag;
    const LinOp a_dag_a = ops.a_dag * ops.a;
    auto sq = [](long n) { return std::sqrt(static_cast<double>(n)); };
    const Matrix rhs = p.lambda * (ops.sigma_plus.mat * ops.sigma_minus.mat *
                                       space::spectral_fn(sq, aa_dag).mat -
                                   ops.sigma_minus.mat * ops.sigma_plus.mat *
                                       space::spectral_fn(sq, a_dag_a).mat);

    CommutatorReport report{};
    report.identity_residual = space::physical_max_norm(comm - rhs, c);

    double eig = 0.0;
    for (int n = 1; n <= std::min(4, c.n_max); ++n) {
        const double w = p.lambda * std::sqrt(static_cast<double>(n));
        const Ket kg = space::basis_ket({Atom::g, n}, c);
        const Ket ke = space::basis_ket({Atom::e, n - 1}, c);
        eig = std::max(eig, (comm * kg.amp + w * kg.amp).norm());
        eig = std::max(eig, (comm * ke.amp - w * ke.amp).norm());
    }
    report.eigenaction_residual = eig;

    const Ket ground = space::basis_ket({Atom::g, 0}, c);
    report.ground_residual = (comm * ground.amp).norm();
    return report;
}

} // namespace jcm::model
