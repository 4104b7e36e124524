#include "iontrap/statespace.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace iontrap {

namespace {
constexpr double kNormTol = 1e-9;
} // namespace

FockSpinState::FockSpinState(int spin_dim, int n_max, Eigen::VectorXcd amplitudes)
    : spin_dim_(spin_dim), n_max_(n_max), amps_(std::move(amplitudes)) {
    if (spin_dim_ < 1)
        throw PreconditionError("spin_dim must be >= 1, got " + std::to_string(spin_dim_));
    if (n_max_ < 1)
        throw PreconditionError("n_max must be >= 1, got " + std::to_string(n_max_));
    const auto expected = static_cast<Eigen::Index>(spin_dim_) * (n_max_ + 1);
    if (amps_.size() != expected)
        throw DimensionMismatch("amplitude vector length " + std::to_string(amps_.size()) +
                                ", expected " + std::to_string(expected));
    const double n2 = amps_.squaredNorm();
    if (std::abs(n2 - 1.0) > kNormTol)
        throw PreconditionError("state norm^2 deviates from 1 by " +
                                std::to_string(std::abs(n2 - 1.0)));
}

FockSpinState FockSpinState::basis(int spin_dim, int n_max, int spin, int n) {
    if (spin < 0 || spin >= spin_dim)
        throw PreconditionError("spin index out of range");
    if (n < 0 || n > n_max)
        throw PreconditionError("Fock index out of range");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(spin_dim) * (n_max + 1));
    v(static_cast<Eigen::Index>(spin) * (n_max + 1) + n) = 1.0;
    return FockSpinState(spin_dim, n_max, std::move(v));
}

int FockSpinState::index(int spin, int n) const {
    if (spin < 0 || spin >= spin_dim_ || n < 0 || n > n_max_)
        throw PreconditionError("basis index out of range");
    return spin * (n_max_ + 1) + n;
}

cx FockSpinState::amp(int spin, int n) const { return amps_(index(spin, n)); }

OperatorMatrix ladder_lowering(int n_max) {
    if (n_max < 1)
        throw PreconditionError("n_max must be >= 1, got " + std::to_string(n_max));
    OperatorMatrix a = OperatorMatrix::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n)
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

OperatorMatrix ladder_raising(int n_max) { return ladder_lowering(n_max).adjoint(); }

OperatorMatrix displacement_operator(cx alpha, int n_max) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw PreconditionError("displacement alpha must be finite");
    const OperatorMatrix a = ladder_lowering(n_max);
    const OperatorMatrix gen = alpha * a.adjoint() - std::conj(alpha) * a;
    return matrix_exponential(gen);
}

int interior_fock_dim(double alpha_abs, int n_max) {
    const int margin = 4 * static_cast<int>(std::ceil(alpha_abs * alpha_abs + alpha_abs));
    const int d = n_max + 1 - margin;
    return d > 0 ? d : 0;
}

FockSpinState coherent_state(cx alpha, int n_max) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw PreconditionError("coherent alpha must be finite");
    const double a2 = std::norm(alpha);
    if (a2 > n_max / 4.0)
        throw PreconditionError("coherent_state requires |alpha|^2 <= n_max/4");
    Eigen::VectorXcd v(n_max + 1);
    // amp(n) = e^{-|a|^2/2} alpha^n / sqrt(n!), built by recurrence
    cx term = std::exp(-a2 / 2.0);
    v(0) = term;
    for (int n = 1; n <= n_max; ++n) {
        term *= alpha / std::sqrt(static_cast<double>(n));
        v(n) = term;
    }
    v.normalize();
    return FockSpinState(1, n_max, std::move(v));
}

cx inner_product(const FockSpinState& a, const FockSpinState& b) {
    if (a.spin_dim() != b.spin_dim() || a.n_max() != b.n_max())
        throw DimensionMismatch("inner_product: state dimensions differ");
    return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const FockSpinState& a, const FockSpinState& b) {
    return std::norm(inner_product(a, b));
}

Eigen::VectorXd reduced_motional_population(const FockSpinState& state) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(state.fock_dim());
    for (int s = 0; s < state.spin_dim(); ++s)
        for (int n = 0; n <= state.n_max(); ++n)
            p(n) += std::norm(state.amp(s, n));
    return p;
}

OperatorMatrix matrix_exponential(const OperatorMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("matrix_exponential: matrix not square");
    return m.exp();
}

double unitarity_defect(const OperatorMatrix& u, int check_dim) {
    const int d = (check_dim > 0 && check_dim <= u.rows()) ? check_dim
                                                           : static_cast<int>(u.rows());
    const OperatorMatrix g = u.adjoint() * u;
    const OperatorMatrix block = g.topLeftCorner(d, d) - OperatorMatrix::Identity(d, d);
    return block.cwiseAbs().maxCoeff();
}

} // namespace iontrap
