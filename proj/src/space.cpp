#include "jcm/space.hpp"

#include <cmath>
#include <string>

namespace jcm::space {

Ket basis_ket(const BareLabel& label, const Cutoff& c) {
    if (label.n < 0 || label.n > c.n_max) {
        throw std::out_of_range("basis_ket: photon number " + std::to_string(label.n) +
                                " outside [0, " + std::to_string(c.n_max) + "]");
    }
    Vector v = Vector::Zero(c.dim());
    v(label.index()) = Complex(1.0, 0.0);
    return Ket{std::move(v)};
}

LadderOps ladder_ops(const Cutoff& c) {
    const int d = c.dim();
    Matrix a = Matrix::Zero(d, d);
    Matrix sm = Matrix::Zero(d, d);
    Matrix s3 = Matrix::Zero(d, d);
    for (int n = 1; n <= c.n_max; ++n) {
        const double w = std::sqrt(static_cast<double>(n));
        for (int s = 0; s < 2; ++s) {
            a(2 * (n - 1) + s, 2 * n + s) = w;
        }
    }
    for (int n = 0; n <= c.n_max; ++n) {
        sm(2 * n, 2 * n + 1) = 1.0;
        s3(2 * n, 2 * n) = -1.0;
        s3(2 * n + 1, 2 * n + 1) = 1.0;
    }
    LinOp a_op{std::move(a), false};
    LinOp sm_op{std::move(sm), false};
    return LadderOps{a_op, a_op.adjoint(), sm_op, sm_op.adjoint(), LinOp{std::move(s3), true}};
}

LinOp identity(const Cutoff& c) {
    return LinOp{Matrix::Identity(c.dim(), c.dim()), true};
}

LinOp photon_number(const Cutoff& c) {
    Matrix m = Matrix::Zero(c.dim(), c.dim());
    for (int n = 0; n <= c.n_max; ++n) {
        for (int s = 0; s < 2; ++s) {
            m(2 * n + s, 2 * n + s) = static_cast<double>(n);
        }
    }
    return LinOp{std::move(m), true};
}

namespace {

constexpr double kDiagTol = 1e-12;

} // namespace

LinOp spectral_fn(const std::function<double(long)>& h, const LinOp& diag_op) {
    const int d = diag_op.dim();
    double max_off = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i != j) max_off = std::max(max_off, std::abs(diag_op.mat(i, j)));
        }
    }
    if (max_off > kDiagTol) {
        throw std::invalid_argument(
            "spectral_fn: operator is not diagonal in the bare basis (max off-diagonal " +
            std::to_string(max_off) + ")");
    }
    Matrix out = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const Complex z = diag_op.mat(i, i);
        if (std::abs(z.imag()) > kDiagTol) {
            throw std::invalid_argument("spectral_fn: diagonal entry has imaginary part");
        }
        const double x = z.real();
        const long n = std::lround(x);
        if (n < 0 || std::abs(x - static_cast<double>(n)) > kDiagTol) {
            throw std::invalid_argument("spectral_fn: diagonal entry " + std::to_string(x) +
                                        " is not a nonnegative integer");
        }
        out(i, i) = h(n);
    }
    return LinOp{std::move(out), true};
}

Eigen::Matrix2cd reduced_atom_state(const Ket& ket) {
    const double nrm = ket.norm();
    if (std::abs(nrm - 1.0) > 1e-9) {
        throw std::invalid_argument("reduced_atom_state: ket is not normalized (norm " +
                                    std::to_string(nrm) + ")");
    }
    const int d = ket.dim();
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (int n = 0; 2 * n + 1 < d; ++n) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                rho(a, b) += ket.amp(2 * n + a) * std::conj(ket.amp(2 * n + b));
            }
        }
    }
    return rho;
}

Complex overlap(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("overlap: dimension mismatch");
    }
    Complex s(0.0, 0.0);
    for (int i = 0; i < a.dim(); ++i) {
        s += std::conj(a.amp(i)) * b.amp(i);
    }
    return s;
}

double max_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double physical_max_norm(const Matrix& m, const Cutoff& c) {
    const int u = c.unsafe_index();
    double mx = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        if (i == u) continue;
        for (int j = 0; j < m.cols(); ++j) {
            if (j == u) continue;
            mx = std::max(mx, std::abs(m(i, j)));
        }
    }
    return mx;
}

Matrix physical_restriction(const Matrix& m, const Cutoff& c) {
    const int d = c.dim();
    const int u = c.unsafe_index();
    Matrix out(d - 1, d - 1);
    for (int i = 0, r = 0; i < d; ++i) {
        if (i == u) continue;
        for (int j = 0, s = 0; j < d; ++j) {
            if (j == u) continue;
            out(r, s) = m(i, j);
            ++s;
        }
        ++r;
    }
    return out;
}

} // namespace jcm::space
