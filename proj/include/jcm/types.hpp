// types.hpp — Core vocabulary: truncated atom⊗field space, labels, states, operators.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace jcm {

using Complex = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using Vector  = Eigen::VectorXcd;

// 1/sqrt(2), shared by every construction that splits a two-state sector.
inline constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

enum class Atom : int { g = 0, e = 1 };

enum class Parity : int { plus = +1, minus = -1 };

inline char atom_char(Atom a) { return a == Atom::g ? 'g' : 'e'; }
inline char parity_char(Parity p) { return p == Parity::plus ? '+' : '-'; }

// Photon-number cutoff. The truncated space is span{|g/e>⊗|n>, 0 <= n <= n_max},
// dimension D = 2(n_max+1). The single state |e, n_max> carries total excitation
// n_max+1 and is a truncation artifact: operator identities are asserted on the
// physical subspace (total excitation <= n_max) that excludes it.
struct Cutoff {
    int n_max;

    explicit Cutoff(int n_max_) : n_max(n_max_) {
        if (n_max < 1) {
            throw std::invalid_argument("Cutoff: n_max must be >= 1, got " +
                                        std::to_string(n_max));
        }
    }

    int dim() const { return 2 * (n_max + 1); }

    // Flat index of the flagged |e, n_max> state.
    int unsafe_index() const { return 2 * n_max + 1; }
};

// Bare product state |atom>⊗|n>. Flat index i = 2n + a with a = 0 for g, 1 for e;
// this convention is fixed for all file output.
struct BareLabel {
    Atom atom;
    int  n;

    int index() const { return 2 * n + (atom == Atom::e ? 1 : 0); }

    static BareLabel from_index(int i) {
        return BareLabel{(i % 2 == 1) ? Atom::e : Atom::g, i / 2};
    }

    // Total excitation N = n + (atom == e).
    int excitation() const { return n + (atom == Atom::e ? 1 : 0); }
};

// Dressed label |n,±>. There is no (0,−) state: the excitation-0 sector is the
// lone ground state |0,+> = |g>⊗|0>.
struct DressedLabel {
    int    n;
    Parity parity;

    DressedLabel(int n_, Parity parity_) : n(n_), parity(parity_) {
        if (n < 0) {
            throw std::invalid_argument("DressedLabel: n must be >= 0");
        }
        if (n == 0 && parity == Parity::minus) {
            throw std::invalid_argument("DressedLabel: the (0,-) state does not exist");
        }
    }
};

// Complex state vector over the truncated basis.
struct Ket {
    Vector amp;

    int dim() const { return static_cast<int>(amp.size()); }
    double norm() const { return amp.norm(); }
};

// Complex linear operator on the truncated space. The hermitian hint, when set
// true, promises ||A - A†||_max <= 1e-12 (validated by make_hermitian).
struct LinOp {
    Matrix mat;
    std::optional<bool> hermitian_hint;

    int dim() const { return static_cast<int>(mat.rows()); }

    LinOp adjoint() const { return LinOp{mat.adjoint(), hermitian_hint}; }
};

inline LinOp operator*(const LinOp& a, const LinOp& b) { return LinOp{a.mat * b.mat, {}}; }
inline LinOp operator+(const LinOp& a, const LinOp& b) { return LinOp{a.mat + b.mat, {}}; }
inline LinOp operator-(const LinOp& a, const LinOp& b) { return LinOp{a.mat - b.mat, {}}; }
inline LinOp operator*(Complex s, const LinOp& a) { return LinOp{s * a.mat, {}}; }
inline LinOp operator*(double s, const LinOp& a) { return LinOp{s * a.mat, {}}; }
inline Ket operator*(const LinOp& a, const Ket& k) { return Ket{a.mat * k.amp}; }

// Raised when a coherent-state construction does not fit under the cutoff;
// carries the smallest cutoff that would.
class TailBoundError : public std::runtime_error {
public:
    TailBoundError(double tail_, int required_n_max_, const std::string& what_)
        : std::runtime_error(what_), tail(tail_), required_n_max(required_n_max_) {}

    double tail;
    int    required_n_max;
};

// Raised when block decomposition is asked for an operator that does not
// preserve the total excitation number.
class BlockStructureError : public std::runtime_error {
public:
    BlockStructureError(double max_off_block_, const std::string& what_)
        : std::runtime_error(what_), max_off_block(max_off_block_) {}

    double max_off_block;
};

} // namespace jcm
