// Complex linear algebra for spin (x) truncated-harmonic-oscillator states:
// ladder and displacement operators, coherent states, fidelities.
//
// Basis ordering is spin-major and fixed everywhere in the library: the
// amplitude of |spin=s, n> lives at index s*(n_max+1) + n. File formats
// emitted by the CLI use the same ordering.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "iontrap/errors.hpp"

namespace iontrap {

using cx = std::complex<double>;

// Dense operator on the truncated space. All operators here are small
// (dim <= a few hundred), so plain dense matrices are the right tool.
using OperatorMatrix = Eigen::MatrixXcd;

// State vector on spin (x) oscillator. Immutable after construction; all
// operations return new values, so states are safe to share across threads.
class FockSpinState {
public:
    FockSpinState(int spin_dim, int n_max, Eigen::VectorXcd amplitudes);

    static FockSpinState basis(int spin_dim, int n_max, int spin, int n);

    int spin_dim() const { return spin_dim_; }
    int n_max() const { return n_max_; }
    int fock_dim() const { return n_max_ + 1; }
    int dim() const { return static_cast<int>(amps_.size()); }

    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    cx amp(int spin, int n) const;
    int index(int spin, int n) const;

    double norm() const { return amps_.norm(); }

private:
    int spin_dim_;
    int n_max_;
    Eigen::VectorXcd amps_;
};

// <n-1|a|n> = sqrt(n) on the (n_max+1)-dimensional truncated space.
OperatorMatrix ladder_lowering(int n_max);
OperatorMatrix ladder_raising(int n_max);

// exp(alpha a^dag - conj(alpha) a), truncated. Exact displacement algebra
// holds only away from the truncation edge; see interior_fock_dim.
OperatorMatrix displacement_operator(cx alpha, int n_max);

// Fock levels unaffected by truncation corruption for excursions up to
// |alpha|: n_max + 1 - 4*ceil(|alpha|^2 + |alpha|), clamped to >= 0.
int interior_fock_dim(double alpha_abs, int n_max);

// Motional-only coherent state (spin_dim = 1), renormalized after
// truncation. Requires |alpha|^2 <= n_max/4 so the dropped tail is < 1e-8.
FockSpinState coherent_state(cx alpha, int n_max);

cx inner_product(const FockSpinState& a, const FockSpinState& b);

// |<a|b>|^2
double fidelity(const FockSpinState& a, const FockSpinState& b);

// Per-Fock-level probabilities, summed over spin.
Eigen::VectorXd reduced_motional_population(const FockSpinState& state);

// Scaling-and-squaring Pade exponential (dense, dim <= a few hundred).
OperatorMatrix matrix_exponential(const OperatorMatrix& m);

// max_ij |(U^dag U - I)_ij| over the leading `check_dim` block
// (full matrix when check_dim <= 0).
double unitarity_defect(const OperatorMatrix& u, int check_dim = 0);

} // namespace iontrap
