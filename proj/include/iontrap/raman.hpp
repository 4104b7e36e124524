// Closed-form stimulated-Raman coupling calculator for hyperfine qubits:
// Rabi rates, Stark shifts, and spontaneous-emission rates for the 9Be+
// stretched-state qubit, plus the generic-ion clock-transition forms.
//
// Coupling strengths g_b, g_r are direct inputs in rad/s (single-beam
// resonant couplings); laser intensities are never modeled. All frequencies
// are angular (rad/s). The Clebsch-Gordan weights for 9Be+ are hard-coded
// reduced coefficients, not derived from a general angular-momentum engine.

#pragma once

#include <complex>
#include <string>

#include "iontrap/errors.hpp"

namespace iontrap {

using cx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Default guard band around formula denominators (rad/s). Detunings closer
// than this to a resonance raise DenominatorSingular instead of returning a
// huge number; the closed forms assume detunings far above the linewidth.
inline constexpr double kDefaultDenominatorGuard = 1e6;

struct IonSpecies {
    std::string name;
    double nuclear_spin_I = 0; // half odd-integer
    double gamma = 0;          // 2P excited-state decay rate (rad/s)
    double omega_F = 0;        // fine-structure splitting (rad/s)
    double omega_0 = 0;        // qubit hyperfine splitting (rad/s)

    // Throws PreconditionError naming the offending field.
    void validate() const;
};

// (sigma-, pi, sigma+) amplitudes with respect to the quantization axis.
// Always unit-norm; construction enforces |e-|^2+|e0|^2+|e+|^2 = 1 to 1e-12.
struct Polarization {
    Polarization(cx em, cx e0, cx ep);

    cx e_minus, e_zero, e_plus;

    static Polarization sigma_minus() { return {1, 0, 0}; }
    static Polarization pi() { return {0, 1, 0}; }
    static Polarization sigma_plus() { return {0, 0, 1}; }
    // Linear polarization perpendicular to the quantization field.
    static Polarization linear_perp_b();
};

enum class Spin { down, up };

struct RamanBeamPair {
    double g_b = 0; // blue-beam coupling (rad/s)
    double g_r = 0; // red-beam coupling (rad/s)
    Polarization pol_b = Polarization::pi();
    Polarization pol_r = Polarization::pi();
    double detuning_Delta = 0;                        // from the 2P1/2 level (rad/s)
    double phase_diff = 0;                            // phi_b - phi_r (rad)
    double kappa = 0;                                 // relative linear-pol angle (rad)
    double denominator_guard = kDefaultDenominatorGuard; // rad/s

    void validate() const;
};

// Carrier Rabi rate for the 9Be+ stretched-state qubit,
// (g_b g_r / sqrt(6)) (b0 r+ + b- r0) wF / (Delta (Delta - wF)),
// carrying the e^{i(phi_b - phi_r)} phase.
cx carrier_rabi_be(const RamanBeamPair& beams, const IonSpecies& ion);

// Spin-dependent displacement drive rates for linear-perpendicular beams at
// relative polarization angle kappa (the e^{i 2 kappa} factor on r+ is
// applied here from beams.kappa):
//   Omega(down) = g_r g_b b r [ (2/3)/Delta + (1/3 + e^{i2k})/(Delta - wF) ]
//   Omega(up)   = g_r g_b b r [ (1/6 + e^{i2k}/2)/Delta
//                             + (5/6 + e^{i2k}/2)/(Delta - wF) ]
cx displacement_rabi_be(const RamanBeamPair& beams, Spin spin, const IonSpecies& ion);

// Exact eight-term differential Stark shift delta(up) - delta(down) for the
// 9Be+ qubit. The raw overload exposes omega_0 for identity checks.
double stark_shift_be(const RamanBeamPair& beams, const IonSpecies& ion);
double stark_shift_be(const RamanBeamPair& beams, double omega_F, double omega_0);

// Magnitude scale of the same expression: sum of |term| over all eight
// terms. The natural yardstick for "how null is the tuned shift".
double stark_shift_be_scale(const RamanBeamPair& beams, double omega_F, double omega_0);

// omega_0 << Delta, wF limit:
// [g_b^2 (b-^2 - b+^2) + g_r^2 (r-^2 - r+^2)] wF / (2 Delta (Delta - wF)).
double stark_shift_be_approx(const RamanBeamPair& beams, const IonSpecies& ion);
double stark_shift_be_approx(const RamanBeamPair& beams, double omega_F);

// Total spontaneous-emission rate out of the 2P levels, weighted by the
// ground-state occupation probabilities p_down + p_up = 1.
double se_rate_be(const RamanBeamPair& beams, const IonSpecies& ion, double p_down,
                  double p_up);
double se_rate_be(const RamanBeamPair& beams, double gamma, double omega_F, double omega_0,
                  double p_down, double p_up);

// R_SE * tau_pi with tau_pi = pi / (2 |Omega|) and <P_down> = <P_up> = 1/2.
double p_se_carrier_pi_be(const RamanBeamPair& beams, const IonSpecies& ion);

// Clock transition |F=I-1/2,0> <-> |F=I+1/2,0>, valid for half odd-integer
// nuclear spin; rates are independent of I.
cx clock_rabi(const RamanBeamPair& beams, const IonSpecies& ion);
double clock_se_rate(const RamanBeamPair& beams, const IonSpecies& ion);
// Polarization-independent clock Stark shift (negative-definite form).
double clock_stark(const RamanBeamPair& beams, const IonSpecies& ion);

// At the optimal operating point: P_SE = 2 sqrt(2) pi gamma / omega_F.
double p_se_clock_pi(const IonSpecies& ion);

// |delta_00 / Omega_00| = 4 sqrt(2) omega_0 / omega_F at the same point.
double stark_over_rabi_clock(const IonSpecies& ion);

// Per-ion derived summary row; the rate fields are evaluated at a caller
// supplied reference coupling and are zero when none was given.
struct BudgetReport {
    IonSpecies ion;
    double carrier_rabi = 0;     // |Omega_00| at reference g (rad/s)
    double stark_shift = 0;      // clock Stark at reference g (rad/s)
    double se_rate = 0;          // clock R_SE at reference g (1/s)
    double p_se_pi = 0;          // dimensionless
    double stark_over_rabi = 0;  // dimensionless
    double optimal_Delta = 0;    // (sqrt(2)-1) omega_F, derived (rad/s)
};

} // namespace iontrap
