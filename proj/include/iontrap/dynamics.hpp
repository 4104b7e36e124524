// Coherent spin-motion dynamics for one trapped ion (and the spin-dependent
// displacement drive shared with the two-ion gate):
//
//  * exact resonant-pulse propagation for carrier / red / blue sideband
//    drives, in the phase convention
//      |dn,n>  ->  cos(O t)|dn,n>  - i e^{+i phi} sin(O t)|up,n'>
//      |up,n'> ->  cos(O t)|up,n'> - i e^{-i phi} sin(O t)|dn,n>
//  * Rabi-rate matrix elements to all orders in the Lamb-Dicke parameter
//    (generalized-Laguerre closed form), with the first-order
//    eta*Omega*sqrt(n_>) form as an option;
//  * a dense interaction Hamiltonian builder that keeps the off-resonant
//    carrier and both sideband terms, and an adaptive integrator that serves
//    as the independent oracle for all analytic paths;
//  * the detuned displacement drive solved in closed form
//    (alpha(t) = (A/delta)(e^{-i delta t} - 1), loop phase -2 pi |A/delta|^2
//    per closed loop for delta > 0).
//
// Note on conventions: the interaction Hamiltonian's sideband terms carry an
// extra factor i relative to the resonant-pulse convention above, so a
// sideband pulse of laser phase phi corresponds to an analytic pulse of
// phase phi + pi/2. Populations are unaffected. oracle_phase_for() applies
// the shim.

#pragma once

#include <functional>
#include <vector>

#include "iontrap/statespace.hpp"

namespace iontrap {

struct MotionalMode {
    double omega_z = 0; // mode frequency (rad/s)
    double z0 = 0;      // ground-state extent (m), optional
    double delta_k = 0; // effective drive wavevector (1/m), optional
    double eta = 0;     // Lamb-Dicke parameter

    static MotionalMode from_eta(double omega_z, double eta);
    static MotionalMode from_geometry(double omega_z, double z0, double delta_k);
    void validate() const;
};

enum class PulseKind { carrier, red_sideband, blue_sideband, displacement_force };

struct PulseSegment {
    PulseKind kind = PulseKind::carrier;
    cx rabi = 0;              // base Rabi rate Omega (rad/s); eta scale applied internally
    double phase = 0;         // phi (rad)
    double duration = 0;      // s
    double detuning_delta = 0; // displacement_force only: gate detuning (rad/s)
};

enum class DebyeWaller { first_order, exact };

// Coupling rate between |dn,n> and |up,n'>.
//   first_order: base for n = n', eta*base*sqrt(n_>) for |n - n'| = 1.
//   exact:       base * |<n'| e^{i eta (a + a^dag)} |n>|, any n, n'.
double rabi_nn(int n, int n_prime, double eta, double base_rabi,
               DebyeWaller dw = DebyeWaller::exact);

// Resonant-drive evolution on a single qubit (x) one mode; seg.kind must be
// carrier or a sideband. |dn,0> is dark under the red sideband.
FockSpinState apply_resonant_pulse(const FockSpinState& state, const PulseSegment& seg,
                                   double eta, DebyeWaller dw = DebyeWaller::first_order);

// --- oracle Hamiltonians ------------------------------------------------

// Spin-flip drive at offset mu = omega_L - omega_0 from the carrier:
// H(t)/hbar = rabi sigma+ e^{-i mu t} [1 + i eta (a e^{-i wz t} + a^dag e^{i wz t})] + h.c.
struct DriveConfig {
    cx rabi = 0;          // Omega e^{i phi}
    double drive_offset = 0; // mu (rad/s): 0 carrier, -wz red, +wz blue
    MotionalMode mode;
};

OperatorMatrix build_interaction_hamiltonian(const DriveConfig& cfg, int n_max, double t);

double drive_offset_for(PulseKind kind, const MotionalMode& mode);

// Analytic pulse phase equivalent to an oracle drive of laser phase phi.
double oracle_phase_for(PulseKind kind, double phi);

// Motional-only detuned displacement drive (resonant term of the force
// interaction): H(t)/hbar = A e^{-i delta t} a^dag + A* e^{i delta t} a.
OperatorMatrix displacement_drive_hamiltonian(cx drive, double delta, int n_max, double t);

// --- numerical propagation ----------------------------------------------

using HamiltonianFn = std::function<OperatorMatrix(double)>;
// Called with (t, raw amplitudes) at t = 0, each accepted step, and t = T.
using TrajectorySink = std::function<void(double, const Eigen::VectorXcd&)>;

// Adaptive Dormand-Prince 5(4) integration of i dpsi/dt = H(t) psi.
// Global norm drift beyond 10*tol raises StepFailure; the returned state is
// normalized (raw amplitudes are observable through the sink).
FockSpinState propagate_numerically(const FockSpinState& state, const HamiltonianFn& h,
                                    double total_time, double tol = 1e-10,
                                    const TrajectorySink& sink = {});

// --- displacement closed forms -------------------------------------------

// alpha(t) for drive amplitude A at detuning delta (delta = 0 handled).
cx displacement_drive_alpha(cx drive, double delta, double t);

// Accumulated scalar phase along the same trajectory:
// -( |A|^2 / delta ) (t - sin(delta t)/delta); -> -|A|^2 delta t^3/6 as delta -> 0.
double displacement_drive_phase(cx drive, double delta, double t);

// Smallest truncation satisfying the sizing rule for peak excursion
// alpha_max: n_max >= ceil((alpha_max + 4)^2).
int displacement_n_max_floor(double alpha_max);

// Applies e^{i Phi_s} D(alpha_s(T)) to the motional factor of each spin
// block s, with per-block drive amplitudes. Checks the truncation sizing
// rule against the peak excursion 2|A|/delta.
FockSpinState displacement_evolve_blocks(const FockSpinState& state,
                                         const std::vector<cx>& block_drives, double delta,
                                         double duration);

// Spin-dependent displacement for one ion: block drives i*eta*Omega(m_S).
FockSpinState spin_dependent_displacement(const FockSpinState& state, cx omega_down,
                                          cx omega_up, double eta, double delta,
                                          double duration);

} // namespace iontrap
