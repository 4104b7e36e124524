#include "iontrap/geomgate.hpp"

#include <cmath>
#include <numbers>

#include "iontrap/optimize.hpp"

namespace iontrap {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double x) {
    double w = std::remainder(x, kTwoPi);
    if (w <= -kPi)
        w += kTwoPi;
    return w;
}

std::array<cx, 4> basis_drives(const GateSchedule& schedule, const GateForces& forces) {
    const cx f_dn = forces.eta * forces.omega_down;
    const cx f_up = forces.eta * forces.omega_up;
    const std::array<std::pair<Spin, Spin>, 4> basis = {{
        {Spin::down, Spin::down},
        {Spin::down, Spin::up},
        {Spin::up, Spin::down},
        {Spin::up, Spin::up},
    }};
    std::array<cx, 4> drives;
    for (int s = 0; s < 4; ++s)
        drives[s] = stretch_mode_force(basis[s].first, basis[s].second, f_dn, f_up,
                                       schedule.spacing_phase);
    return drives;
}

} // namespace

void GateSchedule::validate() const {
    if (!(stretch_freq > 0))
        throw PreconditionError("stretch_freq must be > 0");
    if (!(delta > 0))
        throw PreconditionError("gate detuning delta must be > 0");
    if (delta > omega_z() / 10.0)
        throw PreconditionError("gate detuning delta must be <= omega_z/10");
    if (loop_count < 1)
        throw PreconditionError("loop_count must be >= 1");
}

cx stretch_mode_force(Spin m1, Spin m2, cx force_down, cx force_up, double spacing_phase) {
    const cx f1 = (m1 == Spin::down) ? force_down : force_up;
    const cx f2 = (m2 == Spin::down) ? force_down : force_up;
    return (f1 - std::exp(cx(0, spacing_phase)) * f2) / std::sqrt(2.0);
}

TwoQubitPhaseReport simulate_gate_drives(const GateSchedule& schedule,
                                         const std::array<cx, 4>& drives, int n_max,
                                         const GateTrajectorySink& sink,
                                         int samples_per_loop) {
    schedule.validate();
    const double total = schedule.duration();

    // Full 4 (x) (n_max+1) state: equal superposition of the four spin basis
    // states with the stretch mode in |0>.
    const int fd = n_max + 1;
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4 * static_cast<Eigen::Index>(fd));
    for (int s = 0; s < 4; ++s)
        amps(static_cast<Eigen::Index>(s) * fd) = 0.5;
    const FockSpinState initial(4, n_max, std::move(amps));

    const FockSpinState out = displacement_evolve_blocks(
        initial, {drives.begin(), drives.end()}, schedule.delta, total);

    if (sink) {
        const int samples = samples_per_loop * schedule.loop_count;
        for (int k = 0; k <= samples; ++k) {
            const double t = total * k / samples;
            std::array<cx, 4> alphas;
            for (int s = 0; s < 4; ++s)
                alphas[s] = displacement_drive_alpha(drives[s], schedule.delta, t);
            sink(t, alphas);
        }
    }

    TwoQubitPhaseReport report;
    std::array<double, 4> raw{};
    for (int s = 0; s < 4; ++s) {
        const Eigen::VectorXcd block =
            out.amplitudes().segment(static_cast<Eigen::Index>(s) * fd, fd);
        const cx overlap = block(0); // <0| block
        const double block_norm2 = block.squaredNorm();
        report.motional_return_fidelity[s] =
            block_norm2 > 0 ? std::norm(overlap) / block_norm2 : 0.0;
        raw[s] = std::arg(overlap);
    }
    for (int s = 0; s < 4; ++s)
        report.phases[s] = wrap_angle(raw[s] - raw[0]);
    report.entangling_phase =
        wrap_angle(report.phases[1] + report.phases[2] - report.phases[0] - report.phases[3]);
    return report;
}

TwoQubitPhaseReport simulate_gate(const GateSchedule& schedule, const GateForces& forces,
                                  int n_max, const GateTrajectorySink& sink,
                                  int samples_per_loop) {
    return simulate_gate_drives(schedule, basis_drives(schedule, forces), n_max, sink,
                                samples_per_loop);
}

double calibrate_amplitude(const GateSchedule& schedule, double target_phase, int n_max) {
    schedule.validate();
    if (target_phase == 0)
        return 0.0;
    if (!(target_phase > 0 && target_phase <= kPi))
        throw PreconditionError("target phase must lie in (0, pi]");

    // One loop of radius x = A/delta accumulates -2 pi L x^2; the wrapped
    // dn-up phase decreases monotonically from +pi to 0 on
    // x^2 in [(1 - 1/2)/L, 1/L], which covers every target in (0, pi].
    const double L = schedule.loop_count;
    const double x_lo = std::sqrt(0.5 / L);
    const double x_hi = std::sqrt(1.0 / L);
    if (n_max < displacement_n_max_floor(2.0 * x_hi))
        throw NoBracket("truncation n_max too small for the calibration loop");

    auto phase_of = [&](double x) {
        const std::array<cx, 4> drives = {0.0, x * schedule.delta, -x * schedule.delta, 0.0};
        return simulate_gate_drives(schedule, drives, n_max).phases[1];
    };
    // Nudge off the wrap discontinuity at x_lo.
    const double a = x_lo * (1.0 + 1e-12);
    if (phase_of(a) < target_phase)
        return a * schedule.delta;
    const double x = brent_root([&](double v) { return phase_of(v) - target_phase; }, a, x_hi,
                                1e-12);
    return x * schedule.delta;
}

GateForces scale_forces_to_amplitude(const GateForces& forces, const GateSchedule& schedule,
                                     double amplitude) {
    const std::array<cx, 4> drives = basis_drives(schedule, forces);
    const double current = std::abs(drives[1]);
    if (current < 1e-30)
        throw ZeroRabi("antialigned stretch drive is zero; nothing to scale");
    GateForces scaled = forces;
    const double s = amplitude / current;
    scaled.omega_down *= s;
    scaled.omega_up *= s;
    return scaled;
}

PiPhaseGate assemble_pi_phase_gate(const TwoQubitPhaseReport& report) {
    PiPhaseGate gate;
    gate.unitary = Eigen::Matrix4cd::Zero();
    // e^{-i pi/2} on |up> of each ion: diag(1, -i, -i, -1).
    const std::array<cx, 4> correction = {cx(1, 0), cx(0, -1), cx(0, -1), cx(-1, 0)};
    const std::array<double, 4> target = {0.0, 0.0, 0.0, kPi};
    double worst = 0;
    for (int s = 0; s < 4; ++s) {
        const cx entry = correction[s] * std::exp(cx(0, report.phases[s]));
        gate.unitary(s, s) = entry;
        worst = std::max(worst, std::abs(wrap_angle(std::arg(entry) - target[s])));
    }
    gate.max_phase_deviation = worst;
    return gate;
}

} // namespace iontrap
