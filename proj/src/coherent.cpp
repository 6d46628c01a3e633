#include "jcm/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <vector>

namespace jcm::coherent {

double poisson_tail(double mu, int m) {
    if (mu < 0.0) throw std::invalid_argument("poisson_tail: mu must be >= 0");
    if (mu == 0.0) return 0.0;
    // First tail term e^{-mu} mu^{m+1} / (m+1)! in log space, then forward
    // recurrence; relative accuracy is kept even for tails far below epsilon.
    const int n0 = m + 1;
    double log_term = -mu + n0 * std::log(mu) - std::lgamma(static_cast<double>(n0) + 1.0);
    double term = std::exp(log_term);
    double sum = term;
    for (int n = n0 + 1; n < n0 + 1000000; ++n) {
        term *= mu / static_cast<double>(n);
        sum += term;
        if (static_cast<double>(n) > mu && term < sum * 1e-17) break;
    }
    return sum;
}

int required_cutoff(double mu, double tol) {
    int m = std::max(1, static_cast<int>(std::ceil(mu)));
    while (poisson_tail(mu, m) > tol) {
        ++m;
    }
    return m;
}

namespace {

// c_0 = e^{-|alpha|^2/2}, c_{n+1} = c_n alpha / sqrt(n+1).
Eigen::VectorXcd poisson_amplitudes(Complex alpha, int count, double c0) {
    Eigen::VectorXcd v(count);
    Complex cur(c0, 0.0);
    for (int n = 0; n < count; ++n) {
        v(n) = cur;
        cur *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    return v;
}

void check_tail(Complex alpha, int field_cutoff, const Cutoff& c) {
    const double mu = std::norm(alpha);
    const double tail = poisson_tail(mu, field_cutoff);
    if (tail > kTailTol) {
        const int shift = c.n_max - field_cutoff;
        const int needed = required_cutoff(mu, kTailTol) + shift;
        throw TailBoundError(tail, needed,
                             "coherent state at |alpha|^2 = " + std::to_string(mu) +
                                 " loses mass " + std::to_string(tail) +
                                 " under cutoff; n_max >= " + std::to_string(needed) +
                                 " required");
    }
}

} // namespace

Eigen::VectorXcd coherent_field(Complex alpha, const Cutoff& c) {
    check_tail(alpha, c.n_max, c);
    const double mu = std::norm(alpha);
    return poisson_amplitudes(alpha, c.n_max + 1, std::exp(-0.5 * mu));
}

Ket bare_coherent(Atom atom, Complex alpha, const Cutoff& c) {
    const Eigen::VectorXcd field = coherent_field(alpha, c);
    Vector v = Vector::Zero(c.dim());
    const int a = (atom == Atom::e) ? 1 : 0;
    for (int n = 0; n <= c.n_max; ++n) {
        v(2 * n + a) = field(n);
    }
    return Ket{std::move(v)};
}

namespace detail {

Ket jcm_coherent_unnormalized(Complex alpha, Parity parity, const Cutoff& c) {
    const int count = (parity == Parity::plus) ? c.n_max + 1 : c.n_max;
    const Eigen::VectorXcd amp = poisson_amplitudes(alpha, count, 1.0);
    Vector v = Vector::Zero(c.dim());
    for (int n = 0; n < count; ++n) {
        const DressedLabel label =
            (parity == Parity::plus) ? DressedLabel(n, Parity::plus)
                                     : DressedLabel(n + 1, Parity::minus);
        v += amp(n) * dressed::dressed_ket(label, c).amp;
    }
    return Ket{std::move(v)};
}

} // namespace detail

Ket jcm_coherent(const CoherentLabel& label, const Cutoff& c) {
    const int field_cutoff = (label.parity == Parity::plus) ? c.n_max : c.n_max - 1;
    check_tail(label.alpha, field_cutoff, c);
    Ket k = detail::jcm_coherent_unnormalized(label.alpha, label.parity, c);
    k.amp *= std::exp(-0.5 * std::norm(label.alpha));
    return k;
}

QuadratureRule gauss_laguerre(int nodes) {
    if (nodes < 1) throw std::invalid_argument("gauss_laguerre: nodes must be >= 1");
    Eigen::VectorXd diag(nodes), sub(std::max(0, nodes - 1));
    for (int k = 0; k < nodes; ++k) diag(k) = 2.0 * k + 1.0;
    for (int k = 1; k < nodes; ++k) sub(k - 1) = static_cast<double>(k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("gauss_laguerre: tridiagonal eigensolve failed");
    }
    QuadratureRule rule;
    rule.nodes = solver.eigenvalues();
    rule.weights.resize(nodes);
    for (int k = 0; k < nodes; ++k) {
        const double v0 = solver.eigenvectors()(0, k);
        rule.weights(k) = v0 * v0;  // mu_0 = ∫ e^{-t} dt = 1
    }
    return rule;
}

CompletenessReport completeness_check(const Cutoff& c, const CompletenessOptions& opts) {
    const int p = opts.probe_dim;
    if (p < 0 || p > c.n_max) {
        throw std::invalid_argument("completeness_check: probe_dim must lie in [0, n_max]");
    }
    const int min_angular = 2 * p + 1;
    const int min_radial = p + 1;
    if (opts.angular_nodes < min_angular || opts.radial_nodes < min_radial) {
        throw std::invalid_argument(
            "completeness_check: quadrature too coarse for probe_dim " + std::to_string(p) +
            "; need radial_nodes >= " + std::to_string(min_radial) +
            " and angular_nodes >= " + std::to_string(min_angular));
    }

    const QuadratureRule rule = gauss_laguerre(opts.radial_nodes);
    const int d = c.dim();
    const int m_ang = opts.angular_nodes;

    // One radial shell: (1/M) Σ_θ  |alpha,+><alpha,+| + |alpha,-><alpha,-|
    // with the Gaussian prefactor delegated to the Laguerre weight.
    auto shell = [&](int i) {
        const double r = std::sqrt(rule.nodes(i));
        Matrix acc = Matrix::Zero(d, d);
        for (int j = 0; j < m_ang; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / m_ang;
            const Complex alpha = std::polar(r, theta);
            const Ket up = detail::jcm_coherent_unnormalized(alpha, Parity::plus, c);
            const Ket um = detail::jcm_coherent_unnormalized(alpha, Parity::minus, c);
            acc.noalias() += up.amp * up.amp.adjoint();
            acc.noalias() += um.amp * um.amp.adjoint();
        }
        return Matrix((rule.weights(i) / m_ang) * acc);
    };

    std::vector<Matrix> shells(opts.radial_nodes);
    if (opts.threads <= 1) {
        for (int i = 0; i < opts.radial_nodes; ++i) shells[i] = shell(i);
    } else {
        std::vector<std::future<Matrix>> jobs;
        jobs.reserve(opts.radial_nodes);
        for (int i = 0; i < opts.radial_nodes; ++i) {
            jobs.push_back(std::async(std::launch::async, shell, i));
        }
        for (int i = 0; i < opts.radial_nodes; ++i) shells[i] = jobs[i].get();
    }
    // Fixed-order reduction keeps the result independent of thread count.
    Matrix k_sum = Matrix::Zero(d, d);
    for (const auto& s : shells) k_sum += s;

    const Matrix framed = dressed::to_dressed_frame(k_sum, c);
    const auto labels = dressed::dressed_labels(c);

    CompletenessReport report{p, opts.radial_nodes, opts.angular_nodes, 0.0, 0.0};
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (labels[i].n > p) continue;
        for (int j = 0; j < static_cast<int>(labels.size()); ++j) {
            if (labels[j].n > p) continue;
            const double expected = (i == j) ? 1.0 : 0.0;
            const double dev = std::abs(framed(i, j) - expected);
            if (labels[i].parity != labels[j].parity) {
                report.cross_family_max = std::max(report.cross_family_max, std::abs(framed(i, j)));
            }
            report.max_residual = std::max(report.max_residual, dev);
        }
    }
    return report;
}

Eigen::Vector2cd spin_coherent_atom(Complex zeta) {
    const double norm = 1.0 / std::sqrt(1.0 + std::norm(zeta));
    Eigen::Vector2cd v;
    v << Complex(norm, 0.0), zeta * norm;
    return v;
}

Ket jcm_spin_coherent(const SpinCoherentLabel& label, const Cutoff& c) {
    if (label.n < 0 || label.n + 1 > c.n_max) {
        throw std::out_of_range("jcm_spin_coherent: need n + 1 <= n_max, got n = " +
                                std::to_string(label.n));
    }
    const double norm = 1.0 / std::sqrt(1.0 + std::norm(label.zeta));
    const Ket plus = dressed::dressed_ket(DressedLabel(label.n, Parity::plus), c);
    const Ket minus = dressed::dressed_ket(DressedLabel(label.n + 1, Parity::minus), c);
    return Ket{norm * (plus.amp + label.zeta * minus.amp)};
}

double entanglement_entropy(const Ket& ket) {
    const Eigen::Matrix2cd rho = space::reduced_atom_state(ket);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(rho);
    double s = 0.0;
    for (int i = 0; i < 2; ++i) {
        double x = solver.eigenvalues()(i);
        if (x < 1e-14) continue;
        s -= x * std::log(x);
    }
    return s;
}

double entanglement_entropy_bits(const Ket& ket) {
    return entanglement_entropy(ket) / std::numbers::ln2;
}

Complex expectation(const LinOp& op, const Ket& k) {
    return space::overlap(k, op * k);
}

} // namespace jcm::coherent
