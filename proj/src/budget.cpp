#include "iontrap/budget.hpp"

#include <cmath>
#include <numbers>

namespace iontrap {

namespace {

constexpr double kPi = std::numbers::pi;

// Beams at the spontaneous-emission-optimal polarizations. g_b = g_r = 1:
// every objective below is a g-free ratio.
RamanBeamPair carrier_optimal_beams(double Delta) {
    RamanBeamPair b;
    b.g_b = b.g_r = 1.0;
    b.pol_b = Polarization::pi();             // b0 = 1
    b.pol_r = Polarization::linear_perp_b();  // r- = r+ = 1/sqrt(2)
    b.detuning_Delta = Delta;
    return b;
}

RamanBeamPair clock_optimal_beams(double Delta) {
    RamanBeamPair b;
    b.g_b = b.g_r = 1.0;
    const double s = 1.0 / std::sqrt(2.0);
    b.pol_b = Polarization(s, 0.0, s);   // orthogonal linear pair:
    b.pol_r = Polarization(s, 0.0, -s);  // b- r- - b+ r+ = 1
    b.detuning_Delta = Delta;
    return b;
}

} // namespace

double detuning_objective(const IonSpecies& ion, DetuningObjective objective, double Delta) {
    switch (objective) {
    case DetuningObjective::carrier_be: {
        const RamanBeamPair beams = carrier_optimal_beams(Delta);
        const double rate = se_rate_be(beams, ion.gamma, ion.omega_F, 0.0, 0.5, 0.5);
        const cx rabi = carrier_rabi_be(beams, ion);
        return rate * kPi / (2.0 * std::abs(rabi));
    }
    case DetuningObjective::clock: {
        const RamanBeamPair beams = clock_optimal_beams(Delta);
        return clock_se_rate(beams, ion) / std::abs(clock_rabi(beams, ion));
    }
    }
    throw PreconditionError("unknown detuning objective");
}

double optimize_detuning(const IonSpecies& ion, DetuningObjective objective) {
    ion.validate();
    const double guard = kDefaultDenominatorGuard;
    const auto result = brent_minimize(
        [&](double Delta) { return detuning_objective(ion, objective, Delta); }, guard,
        ion.omega_F - guard, 1e-10);
    return result.x;
}

StarkNullResult stark_null_tune(const RamanBeamPair& beams, const IonSpecies& ion,
                                StarkKnob knob) {
    beams.validate();
    ion.validate();

    auto with_imbalance = [&](double x) {
        RamanBeamPair b = beams;
        const double norm = std::sqrt((1 + x) * (1 + x) + (1 - x) * (1 - x));
        const Polarization pol((1 + x) / norm, 0.0, (1 - x) / norm);
        if (knob == StarkKnob::r_imbalance)
            b.pol_r = pol;
        else
            b.pol_b = pol;
        return b;
    };

    auto shift_at = [&](double x) { return stark_shift_be(with_imbalance(x), ion); };

    // The knob sweeps e_-/+ = (1 +/- x)/norm over x in [-1, 1]; stay off the
    // circular endpoints where the other beam's terms dominate identically.
    const double lo = -0.999, hi = 0.999;
    const double x = brent_root(shift_at, lo, hi, 1e-15);

    StarkNullResult result;
    result.beams = with_imbalance(x);
    result.imbalance = x;
    result.residual = stark_shift_be(result.beams, ion);
    return result;
}

std::vector<BudgetReport> generate_table1(const std::vector<IonSpecies>& ions,
                                          double reference_g) {
    std::vector<BudgetReport> rows;
    rows.reserve(ions.size());
    for (const auto& ion : ions) {
        ion.validate();
        BudgetReport row;
        row.ion = ion;
        row.p_se_pi = p_se_clock_pi(ion);
        row.stark_over_rabi = stark_over_rabi_clock(ion);
        row.optimal_Delta = (std::sqrt(2.0) - 1.0) * ion.omega_F;
        if (reference_g > 0) {
            RamanBeamPair beams = clock_optimal_beams(row.optimal_Delta);
            beams.g_b = beams.g_r = reference_g;
            row.carrier_rabi = std::abs(clock_rabi(beams, ion));
            row.se_rate = clock_se_rate(beams, ion);
            row.stark_shift = clock_stark(beams, ion);
        }
        rows.push_back(row);
    }
    return rows;
}

double sideband_pse(const IonSpecies& ion, double eta) {
    if (!(eta > 0) || !(eta < 1))
        throw PreconditionError("sideband_pse requires 0 < eta < 1");
    return p_se_clock_pi(ion) / eta;
}

} // namespace iontrap
