// Two-ion geometric phase gate on the axial stretch mode. The two spin
// qubits see a spin-dependent dipole force; equal spin states do not couple
// to the stretch mode, antialigned states drive it around a closed loop in
// phase space and pick up the enclosed-area phase. With the drive amplitude
// calibrated so the antialigned loop phase is pi/2, the gate is
// diag(1, e^{i pi/2}, e^{i pi/2}, 1), a pi phase gate up to single-qubit
// corrections.
//
// Two-qubit basis order is (dn dn, dn up, up dn, up up), ion 1 major. Only
// the stretch mode is simulated; the center-of-mass mode is spectrally far
// from the drive and dropped.

#pragma once

#include <array>
#include <functional>

#include "iontrap/dynamics.hpp"

namespace iontrap {

struct GateSchedule {
    double delta = 0;        // gate detuning, rad/s, 0 < delta <= omega_z/10
    double kappa = 0;        // relative beam polarization angle (rad)
    int loop_count = 1;      // closed loops; duration = loop_count * 2 pi / delta
    double stretch_freq = 0; // sqrt(3) * omega_z (rad/s)
    double spacing_phase = 0; // relative force phase between the ions (rad)

    double omega_z() const { return stretch_freq / 1.7320508075688772; }
    double duration() const { return loop_count * kTwoPi / delta; }
    void validate() const;
};

// Per-ion displacement drive rates and the stretch-mode Lamb-Dicke factor.
struct GateForces {
    cx omega_down = 0; // Omega(dn), rad/s
    cx omega_up = 0;   // Omega(up), rad/s
    double eta = 0;    // stretch-mode Lamb-Dicke parameter
};

// Effective stretch-mode drive for one two-spin basis state,
// (F1 - e^{i spacing_phase} F2) / sqrt(2), with F_i the per-ion force for
// spin m_i (callers pass eta * Omega(m) as the per-ion force).
cx stretch_mode_force(Spin m1, Spin m2, cx force_down, cx force_up, double spacing_phase);

struct TwoQubitPhaseReport {
    std::array<double, 4> phases{};                  // relative to dn dn, in (-pi, pi]
    std::array<double, 4> motional_return_fidelity{};
    double entangling_phase = 0; // ph(dn up) + ph(up dn) - ph(dn dn) - ph(up up)
};

// (t, alpha per two-spin basis state) phase-space samples.
using GateTrajectorySink = std::function<void(double, const std::array<cx, 4>&)>;

// Evolves the four spin-basis blocks (stretch mode starting in |0>) for
// loop_count closed loops and reports per-basis phases and motional return
// fidelities. An uncalibrated amplitude yields a report, not an error.
TwoQubitPhaseReport simulate_gate(const GateSchedule& schedule, const GateForces& forces,
                                  int n_max, const GateTrajectorySink& sink = {},
                                  int samples_per_loop = 256);

// Same simulation with explicit per-basis stretch drives (used by the
// calibration root find and by tests).
TwoQubitPhaseReport simulate_gate_drives(const GateSchedule& schedule,
                                         const std::array<cx, 4>& drives, int n_max,
                                         const GateTrajectorySink& sink = {},
                                         int samples_per_loop = 256);

// Effective antialigned-drive amplitude (rad/s) whose simulated dn-up phase
// equals target_phase (in (0, pi]) within 1e-6 rad; scalar root find on the
// monotone wrapped-phase segment. Throws NoBracket when the required loop
// does not fit inside the truncation at this n_max.
double calibrate_amplitude(const GateSchedule& schedule, double target_phase, int n_max);

// Rescales both per-ion forces so the antialigned stretch drive magnitude
// equals `amplitude` (physically: beam-power adjustment).
GateForces scale_forces_to_amplitude(const GateForces& forces, const GateSchedule& schedule,
                                     double amplitude);

struct PiPhaseGate {
    Eigen::Matrix4cd unitary;        // diag, single-qubit corrections applied
    double max_phase_deviation = 0;  // worst |entry phase - target phase| (rad)
};

// Composes the simulated diagonal with e^{-i pi/2} corrections on |up> of
// each ion; for a calibrated report the result is diag(1, 1, 1, -1).
PiPhaseGate assemble_pi_phase_gate(const TwoQubitPhaseReport& report);

} // namespace iontrap
