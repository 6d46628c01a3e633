#include "jcm/dressed.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>

namespace jcm::dressed {

std::vector<DressedLabel> dressed_labels(const Cutoff& c) {
    std::vector<DressedLabel> labels;
    labels.reserve(2 * c.n_max + 1);
    labels.emplace_back(0, Parity::plus);
    for (int n = 1; n <= c.n_max; ++n) {
        labels.emplace_back(n, Parity::plus);
        labels.emplace_back(n, Parity::minus);
    }
    return labels;
}

Ket dressed_ket(const DressedLabel& label, const Cutoff& c) {
    if (label.n > c.n_max) {
        throw std::out_of_range("dressed_ket: excitation " + std::to_string(label.n) +
                                " not representable at n_max " + std::to_string(c.n_max));
    }
    Vector v = Vector::Zero(c.dim());
    if (label.n == 0) {
        v(BareLabel{Atom::g, 0}.index()) = 1.0;
    } else {
        const double sign = (label.parity == Parity::plus) ? 1.0 : -1.0;
        v(BareLabel{Atom::e, label.n - 1}.index()) = kInvSqrt2;
        v(BareLabel{Atom::g, label.n}.index()) = sign * kInvSqrt2;
    }
    return Ket{std::move(v)};
}

Matrix dressed_basis_matrix(const Cutoff& c) {
    const int d = c.dim();
    Matrix v(d, d);
    int col = 0;
    for (const auto& label : dressed_labels(c)) {
        v.col(col++) = dressed_ket(label, c).amp;
    }
    v.col(col) = space::basis_ket({Atom::e, c.n_max}, c).amp;
    return v;
}

Matrix to_dressed_frame(const Matrix& m, const Cutoff& c) {
    const Matrix v = dressed_basis_matrix(c);
    return v.adjoint() * m * v;
}

double interior_max_norm(const Matrix& m, const Cutoff& c) {
    const Matrix f = to_dressed_frame(m, c);
    const auto labels = dressed_labels(c);
    double mx = 0.0;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (labels[i].n >= c.n_max) continue;
        for (int j = 0; j < static_cast<int>(labels.size()); ++j) {
            if (labels[j].n >= c.n_max) continue;
            mx = std::max(mx, std::abs(f(i, j)));
        }
    }
    return mx;
}

LinOp unitary(const Cutoff& c) {
    const int d = c.dim();
    const LinOp gen = model::generator(c);
    Matrix p0 = Matrix::Zero(d, d);
    p0(0, 0) = 1.0;
    Matrix u = kInvSqrt2 * (Matrix::Identity(d, d) - p0 + 2.0 * gen.mat) + p0;
    u(c.unsafe_index(), c.unsafe_index()) = 1.0;
    return LinOp{std::move(u), false};
}

LinOp unitary_via_exponential(const Cutoff& c) {
    const Matrix arg = (std::numbers::pi / 2.0) * model::generator(c).mat;
    return LinOp{arg.exp(), false};
}

double dressed_energy(const model::JcmParams& p, int total_excitation, Parity parity) {
    const double sign = (parity == Parity::plus) ? 1.0 : -1.0;
    return p.omega * static_cast<double>(total_excitation) +
           sign * (p.lambda * std::sqrt(static_cast<double>(total_excitation)));
}

namespace {

double interaction_diagonal(const model::JcmParams& p, const BareLabel& label) {
    const double sign = (label.atom == Atom::e) ? 1.0 : -1.0;
    return sign * (p.lambda * std::sqrt(static_cast<double>(label.excitation())));
}

} // namespace

LinOp diagonal_interaction(const model::JcmParams& p, const Cutoff& c) {
    const int d = c.dim();
    Matrix m = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        m(i, i) = interaction_diagonal(p, BareLabel::from_index(i));
    }
    return LinOp{std::move(m), true};
}

LinOp diagonal_full(const model::JcmParams& p, const Cutoff& c) {
    const int d = c.dim();
    Matrix m = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const BareLabel label = BareLabel::from_index(i);
        m(i, i) = p.omega * static_cast<double>(label.excitation()) +
                  interaction_diagonal(p, label);
    }
    return LinOp{std::move(m), true};
}

namespace {

// Bare support of a dressed ket, kept symbolic so dyad entries come out as
// exact dyadic rationals: signs[] are ±1 and the overall scale is 1 for the
// singleton |0,+> and 1/√2 otherwise.
struct DressedSupport {
    int    count;
    int    idx[2];
    double sign[2];
};

DressedSupport support_of(const DressedLabel& label) {
    if (label.n == 0) {
        return DressedSupport{1, {BareLabel{Atom::g, 0}.index(), -1}, {1.0, 0.0}};
    }
    const double s = (label.parity == Parity::plus) ? 1.0 : -1.0;
    return DressedSupport{2,
                          {BareLabel{Atom::e, label.n - 1}.index(),
                           BareLabel{Atom::g, label.n}.index()},
                          {1.0, s}};
}

// Adds w · |row><col| with the product of the two 1/√2 scales written as an
// exact 1/2 (instead of the rounded square of kInvSqrt2).
void add_dressed_dyad(Matrix& m, const DressedLabel& row, const DressedLabel& col, double w) {
    const DressedSupport r = support_of(row);
    const DressedSupport s = support_of(col);
    double scale = 1.0;
    if (r.count == 2 && s.count == 2) {
        scale = 0.5;
    } else if (r.count == 2 || s.count == 2) {
        scale = kInvSqrt2;
    }
    for (int i = 0; i < r.count; ++i) {
        for (int j = 0; j < s.count; ++j) {
            m(r.idx[i], s.idx[j]) += w * (r.sign[i] * s.sign[j] * scale);
        }
    }
}

} // namespace

LinOp dressed_annihilation(const Cutoff& c) {
    Matrix m = Matrix::Zero(c.dim(), c.dim());
    for (int n = 1; n <= c.n_max; ++n) {
        add_dressed_dyad(m, DressedLabel(n - 1, Parity::plus), DressedLabel(n, Parity::plus),
                         std::sqrt(static_cast<double>(n)));
    }
    for (int n = 2; n <= c.n_max; ++n) {
        add_dressed_dyad(m, DressedLabel(n - 1, Parity::minus), DressedLabel(n, Parity::minus),
                         std::sqrt(static_cast<double>(n - 1)));
    }
    return LinOp{std::move(m), false};
}

LinOp dressed_lowering(const Cutoff& c) {
    Matrix m = Matrix::Zero(c.dim(), c.dim());
    for (int n = 0; n < c.n_max; ++n) {
        add_dressed_dyad(m, DressedLabel(n, Parity::plus), DressedLabel(n + 1, Parity::minus), 1.0);
    }
    return LinOp{std::move(m), false};
}

LinOp conjugated(const LinOp& x, const LinOp& u) {
    return LinOp{u.mat * x.mat * u.mat.adjoint(), {}};
}

namespace {

constexpr double kBlockTol = 1e-12;

ExcitationBlock sector_skeleton(int total_excitation, const Cutoff& c) {
    ExcitationBlock b{};
    b.total_excitation = total_excitation;
    b.truncation_artifact = total_excitation > c.n_max;
    b.block = Eigen::Matrix2cd::Zero();
    if (total_excitation == 0) {
        b.size = 1;
        b.bare_indices = {BareLabel{Atom::g, 0}.index(), -1};
    } else if (total_excitation <= c.n_max) {
        b.size = 2;
        b.bare_indices = {BareLabel{Atom::e, total_excitation - 1}.index(),
                          BareLabel{Atom::g, total_excitation}.index()};
    } else {
        b.size = 1;
        b.bare_indices = {c.unsafe_index(), -1};
    }
    return b;
}

std::vector<ExcitationBlock> all_sectors(const Cutoff& c) {
    std::vector<ExcitationBlock> blocks;
    blocks.reserve(c.n_max + 2);
    for (int nn = 0; nn <= c.n_max + 1; ++nn) {
        blocks.push_back(sector_skeleton(nn, c));
    }
    return blocks;
}

} // namespace

std::vector<ExcitationBlock> block_decompose(const LinOp& op, const Cutoff& c) {
    const int d = c.dim();
    if (op.dim() != d) {
        throw std::invalid_argument("block_decompose: dimension mismatch");
    }
    double max_off = 0.0;
    for (int i = 0; i < d; ++i) {
        const int ni = BareLabel::from_index(i).excitation();
        for (int j = 0; j < d; ++j) {
            if (BareLabel::from_index(j).excitation() != ni) {
                max_off = std::max(max_off, std::abs(op.mat(i, j)));
            }
        }
    }
    if (max_off > kBlockTol) {
        throw BlockStructureError(
            max_off, "block_decompose: operator does not preserve the excitation number "
                     "(max off-block magnitude " + std::to_string(max_off) + ")");
    }
    auto blocks = all_sectors(c);
    for (auto& b : blocks) {
        for (int r = 0; r < b.size; ++r) {
            for (int s = 0; s < b.size; ++s) {
                b.block(r, s) = op.mat(b.bare_indices[r], b.bare_indices[s]);
            }
        }
    }
    return blocks;
}

LinOp assemble(const std::vector<ExcitationBlock>& blocks, const Cutoff& c) {
    const int d = c.dim();
    Matrix m = Matrix::Zero(d, d);
    for (const auto& b : blocks) {
        for (int r = 0; r < b.size; ++r) {
            for (int s = 0; s < b.size; ++s) {
                m(b.bare_indices[r], b.bare_indices[s]) = b.block(r, s);
            }
        }
    }
    return LinOp{std::move(m), {}};
}

std::vector<ExcitationBlock> interaction_blocks(const model::JcmParams& p, const Cutoff& c) {
    auto blocks = all_sectors(c);
    for (auto& b : blocks) {
        if (b.size == 2) {
            const double g = model::detail::interaction_coupling(p, b.total_excitation);
            b.block(0, 1) = g;
            b.block(1, 0) = g;
        }
    }
    return blocks;
}

std::vector<ExcitationBlock> full_hamiltonian_blocks(const model::JcmParams& p, const Cutoff& c) {
    auto blocks = all_sectors(c);
    for (auto& b : blocks) {
        for (int r = 0; r < b.size; ++r) {
            b.block(r, r) = model::detail::full_diagonal(p, BareLabel::from_index(b.bare_indices[r]));
        }
        if (b.size == 2) {
            const double g = model::detail::interaction_coupling(p, b.total_excitation);
            b.block(0, 1) = g;
            b.block(1, 0) = g;
        }
    }
    return blocks;
}

std::vector<ExcitationBlock> excitation_number_blocks(const Cutoff& c) {
    auto blocks = all_sectors(c);
    for (auto& b : blocks) {
        for (int r = 0; r < b.size; ++r) {
            b.block(r, r) = static_cast<double>(b.total_excitation);
        }
    }
    return blocks;
}

std::vector<ExcitationBlock> unitary_blocks(const Cutoff& c) {
    auto blocks = all_sectors(c);
    for (auto& b : blocks) {
        if (b.size == 1) {
            b.block(0, 0) = 1.0;
        } else {
            b.block(0, 0) = kInvSqrt2;
            b.block(0, 1) = kInvSqrt2;
            b.block(1, 0) = -kInvSqrt2;
            b.block(1, 1) = kInvSqrt2;
        }
    }
    return blocks;
}

std::vector<ExcitationBlock> diagonal_interaction_blocks(const model::JcmParams& p,
                                                         const Cutoff& c) {
    auto blocks = all_sectors(c);
    for (auto& b : blocks) {
        for (int r = 0; r < b.size; ++r) {
            b.block(r, r) = interaction_diagonal(p, BareLabel::from_index(b.bare_indices[r]));
        }
    }
    return blocks;
}

std::vector<ExcitationBlock> diagonal_full_blocks(const model::JcmParams& p, const Cutoff& c) {
    auto blocks = all_sectors(c);
    for (auto& b : blocks) {
        for (int r = 0; r < b.size; ++r) {
            const BareLabel label = BareLabel::from_index(b.bare_indices[r]);
            b.block(r, r) = p.omega * static_cast<double>(label.excitation()) +
                            interaction_diagonal(p, label);
        }
    }
    return blocks;
}

} // namespace jcm::dressed
