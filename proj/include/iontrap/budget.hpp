// Numerical-optimization layer over the closed forms: the spontaneous-
// emission-optimal detuning, polarization-imbalance Stark nulling, and the
// per-ion derived-quantity table.

#pragma once

#include <vector>

#include "iontrap/optimize.hpp"
#include "iontrap/raman.hpp"

namespace iontrap {

enum class DetuningObjective {
    carrier_be, // P_SE for a carrier pi pulse, stretched-state qubit
    clock       // R_SE / |Omega_00|, clock transition
};

// Objective as a function of Delta, evaluated in the omega_0 -> 0
// approximation at the optimal polarization choices (beam powers cancel).
double detuning_objective(const IonSpecies& ion, DetuningObjective objective, double Delta);

// Minimizes over Delta in (guard, omega_F - guard); relative accuracy 1e-8.
double optimize_detuning(const IonSpecies& ion, DetuningObjective objective);

enum class StarkKnob { r_imbalance, b_imbalance };

struct StarkNullResult {
    RamanBeamPair beams;  // adjusted pair, selected polarization retuned
    double imbalance = 0; // root x with e_-/+ = (1 +/- x)/norm on the knob beam
    double residual = 0;  // exact Stark shift at the solution (rad/s)
};

// Root-finds the selected polarization imbalance (total polarization held
// normalized) until the exact Stark shift is nulled. Throws NoSignChange if
// the shift does not change sign over the admissible knob range.
StarkNullResult stark_null_tune(const RamanBeamPair& beams, const IonSpecies& ion,
                                StarkKnob knob);

// One BudgetReport row per ion: P_SE = 2 sqrt(2) pi gamma/omega_F,
// |delta/Omega| = 4 sqrt(2) omega_0/omega_F, and the derived optimal
// detuning. Rate fields are evaluated at reference_g (rad/s) when nonzero.
std::vector<BudgetReport> generate_table1(const std::vector<IonSpecies>& ions,
                                          double reference_g = 0.0);

// Sideband pi-pulse spontaneous-emission probability, carrier value / eta.
double sideband_pse(const IonSpecies& ion, double eta);

} // namespace iontrap
