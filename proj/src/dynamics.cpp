#include "iontrap/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace iontrap {

namespace {

constexpr double kPi = std::numbers::pi;

// L_k^{(d)}(x) by the three-term recurrence; x here is eta^2 (small), so the
// recurrence is stable for the level range we use.
double generalized_laguerre(int k, int d, double x) {
    if (k == 0)
        return 1.0;
    double lkm1 = 1.0;
    double lk = 1.0 + d - x;
    for (int j = 1; j < k; ++j) {
        const double lkp1 = ((2.0 * j + 1.0 + d - x) * lk - (j + d) * lkm1) / (j + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

} // namespace

MotionalMode MotionalMode::from_eta(double omega_z, double eta) {
    MotionalMode m;
    m.omega_z = omega_z;
    m.eta = eta;
    m.validate();
    return m;
}

MotionalMode MotionalMode::from_geometry(double omega_z, double z0, double delta_k) {
    MotionalMode m;
    m.omega_z = omega_z;
    m.z0 = z0;
    m.delta_k = delta_k;
    m.eta = delta_k * z0;
    m.validate();
    return m;
}

void MotionalMode::validate() const {
    if (!(omega_z > 0))
        throw PreconditionError("mode frequency omega_z must be > 0");
    if (!(eta > 0))
        throw PreconditionError("Lamb-Dicke parameter eta must be > 0");
    if (z0 > 0 && delta_k > 0) {
        const double derived = delta_k * z0;
        if (std::abs(derived - eta) > 1e-12 * eta)
            throw PreconditionError("eta inconsistent with delta_k * z0");
    }
}

double rabi_nn(int n, int n_prime, double eta, double base_rabi, DebyeWaller dw) {
    if (n < 0 || n_prime < 0)
        throw PreconditionError("Fock levels must be >= 0");
    const int lo = std::min(n, n_prime);
    const int hi = std::max(n, n_prime);
    const int d = hi - lo;
    if (dw == DebyeWaller::first_order) {
        if (d == 0)
            return base_rabi;
        if (d == 1)
            return eta * base_rabi * std::sqrt(static_cast<double>(hi));
        throw PreconditionError("first-order rabi_nn defined only for |n - n'| <= 1");
    }
    const double x = eta * eta;
    // |<n'|e^{i eta (a + a^dag)}|n>| = e^{-x/2} eta^d sqrt(lo!/hi!) |L_lo^{(d)}(x)|
    double fact_ratio = 1.0;
    for (int j = lo + 1; j <= hi; ++j)
        fact_ratio *= j;
    return base_rabi * std::exp(-x / 2.0) * std::pow(eta, d) / std::sqrt(fact_ratio) *
           std::abs(generalized_laguerre(lo, d, x));
}

FockSpinState apply_resonant_pulse(const FockSpinState& state, const PulseSegment& seg,
                                   double eta, DebyeWaller dw) {
    if (state.spin_dim() != 2)
        throw PreconditionError("resonant pulses act on a single qubit (spin_dim 2)");
    if (seg.kind == PulseKind::displacement_force)
        throw PreconditionError("displacement_force is not a resonant pulse");
    if (seg.duration < 0)
        throw PreconditionError("pulse duration must be >= 0");

    const int n_max = state.n_max();
    Eigen::VectorXcd amps = state.amplitudes();

    // Edge level whose partner lies outside the truncated space.
    if (seg.kind == PulseKind::blue_sideband) {
        if (std::norm(state.amp(0, n_max)) > 1e-8)
            throw TruncationOverflow("blue sideband would drive |dn," + std::to_string(n_max) +
                                     "> past the truncation level");
    } else if (seg.kind == PulseKind::red_sideband) {
        if (std::norm(state.amp(1, n_max)) > 1e-8)
            throw TruncationOverflow("red sideband would drive |up," + std::to_string(n_max) +
                                     "> past the truncation level");
    }

    const cx phase_up = -cx(0, 1) * std::exp(cx(0, seg.phase));   // on dn -> up
    const cx phase_dn = -cx(0, 1) * std::exp(cx(0, -seg.phase));  // on up -> dn
    const double base = std::abs(seg.rabi);
    const double rabi_arg = std::arg(seg.rabi);

    // Couple (dn, n) <-> (up, n') pairwise.
    for (int n = 0; n <= n_max; ++n) {
        int n_up;
        switch (seg.kind) {
        case PulseKind::carrier: n_up = n; break;
        case PulseKind::red_sideband: n_up = n - 1; break;
        default: n_up = n + 1; break;
        }
        if (n_up < 0 || n_up > n_max)
            continue; // dark: no partner inside the space
        const double rate = rabi_nn(n, n_up, eta, base, dw);
        const double angle = rate * seg.duration;
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        const int i_dn = state.index(0, n);
        const int i_up = state.index(1, n_up);
        const cx a_dn = amps(i_dn);
        const cx a_up = amps(i_up);
        // A complex Rabi rate folds its argument into the drive phase.
        const cx up_factor = phase_up * std::exp(cx(0, rabi_arg));
        const cx dn_factor = phase_dn * std::exp(cx(0, -rabi_arg));
        amps(i_dn) = c * a_dn + s * dn_factor * a_up;
        amps(i_up) = s * up_factor * a_dn + c * a_up;
    }
    return FockSpinState(2, n_max, std::move(amps));
}

double drive_offset_for(PulseKind kind, const MotionalMode& mode) {
    switch (kind) {
    case PulseKind::carrier: return 0.0;
    case PulseKind::red_sideband: return -mode.omega_z;
    case PulseKind::blue_sideband: return mode.omega_z;
    default:
        throw PreconditionError("displacement_force has no carrier offset");
    }
}

double oracle_phase_for(PulseKind kind, double phi) {
    return kind == PulseKind::carrier ? phi : phi + kPi / 2.0;
}

OperatorMatrix build_interaction_hamiltonian(const DriveConfig& cfg, int n_max, double t) {
    cfg.mode.validate();
    const int fd = n_max + 1;
    const OperatorMatrix a = ladder_lowering(n_max);
    const cx i1(0, 1);
    OperatorMatrix mot = OperatorMatrix::Identity(fd, fd);
    mot += i1 * cfg.mode.eta *
           (a * std::exp(-i1 * cfg.mode.omega_z * t) +
            a.adjoint() * std::exp(i1 * cfg.mode.omega_z * t));
    const OperatorMatrix blk = cfg.rabi * std::exp(-i1 * cfg.drive_offset * t) * mot;
    OperatorMatrix h = OperatorMatrix::Zero(2 * fd, 2 * fd);
    h.block(fd, 0, fd, fd) = blk;          // sigma+ (x) [...]
    h.block(0, fd, fd, fd) = blk.adjoint();
    return h;
}

OperatorMatrix displacement_drive_hamiltonian(cx drive, double delta, int n_max, double t) {
    const OperatorMatrix a = ladder_lowering(n_max);
    const cx c = drive * std::exp(cx(0, -delta * t));
    return c * a.adjoint() + std::conj(c) * a;
}

FockSpinState propagate_numerically(const FockSpinState& state, const HamiltonianFn& h,
                                    double total_time, double tol,
                                    const TrajectorySink& sink) {
    if (!(tol > 0))
        throw PreconditionError("integrator tolerance must be > 0");
    if (total_time < 0)
        throw PreconditionError("propagation time must be >= 0");

    using Vec = Eigen::VectorXcd;
    auto deriv = [&](double t, const Vec& y) -> Vec { return cx(0, -1) * (h(t) * y); };

    // Dormand-Prince 5(4) coefficients.
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    Vec y = state.amplitudes();
    double t = 0;
    if (sink)
        sink(0.0, y);
    if (total_time == 0)
        return state;

    Vec k1 = deriv(t, y);
    double dt = total_time / 100.0;
    const double dt_min = total_time * 1e-15;
    int consecutive_rejects = 0;

    while (t < total_time) {
        if (t + dt > total_time)
            dt = total_time - t;
        const Vec k2 = deriv(t + c2 * dt, y + dt * (a21 * k1));
        const Vec k3 = deriv(t + c3 * dt, y + dt * (a31 * k1 + a32 * k2));
        const Vec k4 = deriv(t + c4 * dt, y + dt * (a41 * k1 + a42 * k2 + a43 * k3));
        const Vec k5 = deriv(t + c5 * dt, y + dt * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Vec k6 =
            deriv(t + dt, y + dt * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Vec y5 = y + dt * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Vec k7 = deriv(t + dt, y5);
        const Vec err_vec =
            dt * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        // error relative to tol with unit state norm as the scale
        const double err = err_vec.norm() / tol;
        if (err <= 1.0) {
            t += dt;
            y = y5;
            k1 = k7; // FSAL
            if (sink)
                sink(t, y);
            consecutive_rejects = 0;
        } else {
            ++consecutive_rejects;
        }
        const double factor = 0.9 * std::pow(err > 1e-300 ? err : 1e-300, -0.2);
        dt *= std::clamp(factor, 0.2, 5.0);
        if (dt < dt_min) {
            if (++consecutive_rejects > 3 || dt <= 0)
                throw StepFailure("step size underflow at t = " + std::to_string(t));
            dt = dt_min;
        }
    }

    const double drift = std::abs(y.norm() - 1.0);
    if (drift > 10.0 * tol)
        throw StepFailure("norm drift " + std::to_string(drift) + " exceeds 10*tol");
    y.normalize();
    return FockSpinState(state.spin_dim(), state.n_max(), std::move(y));
}

cx displacement_drive_alpha(cx drive, double delta, double t) {
    const double dt = delta * t;
    if (std::abs(dt) < 1e-8) {
        // (e^{-i d t} - 1)/d = -i t (1 - i d t/2 - (d t)^2/6 + ...)
        const cx series = cx(0, -t) * (cx(1, 0) + cx(0, -dt / 2.0) - dt * dt / 6.0);
        return drive * series;
    }
    return (drive / delta) * (std::exp(cx(0, -dt)) - 1.0);
}

double displacement_drive_phase(cx drive, double delta, double t) {
    const double a2 = std::norm(drive);
    const double dt = delta * t;
    if (std::abs(dt) < 1e-8)
        return -a2 * delta * t * t * t / 6.0;
    return -(a2 / delta) * (t - std::sin(dt) / delta);
}

int displacement_n_max_floor(double alpha_max) {
    return static_cast<int>(std::ceil((alpha_max + 4.0) * (alpha_max + 4.0)));
}

FockSpinState displacement_evolve_blocks(const FockSpinState& state,
                                         const std::vector<cx>& block_drives, double delta,
                                         double duration) {
    if (static_cast<int>(block_drives.size()) != state.spin_dim())
        throw DimensionMismatch("one drive amplitude per spin block required");
    if (duration < 0)
        throw PreconditionError("duration must be >= 0");

    const int n_max = state.n_max();
    const int fd = n_max + 1;

    double peak = 0;
    for (const cx& d : block_drives) {
        // peak excursion along the loop: diameter 2|A|/delta (or |A| t resonant)
        const double excursion = (delta != 0.0) ? 2.0 * std::abs(d) / std::abs(delta)
                                                : std::abs(d) * duration;
        peak = std::max(peak, excursion);
    }
    if (n_max < displacement_n_max_floor(peak))
        throw TruncationOverflow("n_max " + std::to_string(n_max) +
                                 " below sizing floor " +
                                 std::to_string(displacement_n_max_floor(peak)) +
                                 " for excursion " + std::to_string(peak));

    Eigen::VectorXcd amps = state.amplitudes();
    for (int s = 0; s < state.spin_dim(); ++s) {
        const cx a = displacement_drive_alpha(block_drives[s], delta, duration);
        const double phi = displacement_drive_phase(block_drives[s], delta, duration);
        const OperatorMatrix d = displacement_operator(a, n_max);
        amps.segment(static_cast<Eigen::Index>(s) * fd, fd) =
            std::exp(cx(0, phi)) * (d * amps.segment(static_cast<Eigen::Index>(s) * fd, fd));
    }
    amps.normalize();
    return FockSpinState(state.spin_dim(), n_max, std::move(amps));
}

FockSpinState spin_dependent_displacement(const FockSpinState& state, cx omega_down,
                                          cx omega_up, double eta, double delta,
                                          double duration) {
    if (state.spin_dim() != 2)
        throw PreconditionError("spin_dependent_displacement acts on one ion (spin_dim 2)");
    const cx i1(0, 1);
    return displacement_evolve_blocks(state, {i1 * eta * omega_down, i1 * eta * omega_up},
                                      delta, duration);
}

} // namespace iontrap
