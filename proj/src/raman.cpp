#include "iontrap/raman.hpp"

#include <array>
#include <cmath>

namespace iontrap {

namespace {

constexpr double kPi = kTwoPi / 2.0;
constexpr double kPolNormTol = 1e-12;

// Throws when a denominator sits inside the guard band, naming the term.
double guarded(double value, double guard, const char* term) {
    if (std::abs(value) < guard)
        throw DenominatorSingular(std::string(term) + " within guard band (" +
                                  std::to_string(value) + " rad/s)");
    return value;
}

double sq(double x) { return x * x; }
double sq(cx x) { return std::norm(x); }

// Eight (weight, denominator) pairs of the exact 9Be+ differential Stark
// shift. Shared by the value, the scale, and the spontaneous-emission rate
// (which uses the same weights against squared denominators, regrouped by
// initial spin state).
struct StarkTerm {
    double weight;
    double denom;
    const char* name;
};

std::array<StarkTerm, 8> stark_terms(const RamanBeamPair& b, double omega_F, double omega_0) {
    const double D = b.detuning_Delta;
    const double gb2 = sq(b.g_b), gr2 = sq(b.g_r);
    const double bm2 = sq(b.pol_b.e_minus), b02 = sq(b.pol_b.e_zero), bp2 = sq(b.pol_b.e_plus);
    const double rm2 = sq(b.pol_r.e_minus), r02 = sq(b.pol_r.e_zero), rp2 = sq(b.pol_r.e_plus);
    return {{
        {gb2 * (bm2 / 6 + b02 / 3 + bp2 / 2), D + omega_0, "Delta + omega_0"},
        {gb2 * (5 * bm2 / 6 + 2 * b02 / 3 + bp2 / 2), D - omega_F + omega_0,
         "Delta - omega_F + omega_0"},
        {-gb2 * (2 * bm2 / 3 + b02 / 3), D, "Delta"},
        {-gb2 * (bm2 / 3 + 2 * b02 / 3 + bp2), D - omega_F, "Delta - omega_F"},
        {gr2 * (rm2 / 6 + r02 / 3 + rp2 / 2), D, "Delta"},
        {gr2 * (5 * rm2 / 6 + 2 * r02 / 3 + rp2 / 2), D - omega_F, "Delta - omega_F"},
        {-gr2 * (2 * rm2 / 3 + r02 / 3), D - omega_0, "Delta - omega_0"},
        {-gr2 * (rm2 / 3 + 2 * r02 / 3 + rp2), D - omega_0 - omega_F,
         "Delta - omega_0 - omega_F"},
    }};
}

} // namespace

void IonSpecies::validate() const {
    if (!(gamma > 0))
        throw PreconditionError(name + ": gamma must be > 0");
    if (!(omega_0 > 0))
        throw PreconditionError(name + ": omega_0 must be > 0");
    if (!(omega_F > omega_0))
        throw PreconditionError(name + ": omega_F must exceed omega_0");
    const double twoI = 2.0 * nuclear_spin_I;
    const double rounded = std::round(twoI);
    if (twoI <= 0 || std::abs(twoI - rounded) > 1e-9 || std::fmod(rounded, 2.0) != 1.0)
        throw PreconditionError(name + ": 2*I must be a positive odd integer");
}

Polarization::Polarization(cx em, cx e0, cx ep) : e_minus(em), e_zero(e0), e_plus(ep) {
    const double n2 = std::norm(em) + std::norm(e0) + std::norm(ep);
    if (std::abs(n2 - 1.0) > kPolNormTol)
        throw PreconditionError("polarization triple not unit norm (|.|^2 = " +
                                std::to_string(n2) + ")");
}

Polarization Polarization::linear_perp_b() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, 0.0, s};
}

void RamanBeamPair::validate() const {
    if (g_b < 0 || g_r < 0)
        throw PreconditionError("beam couplings must be >= 0");
    if (!(denominator_guard > 0))
        throw PreconditionError("denominator_guard must be > 0");
}

cx carrier_rabi_be(const RamanBeamPair& beams, const IonSpecies& ion) {
    beams.validate();
    ion.validate();
    const double D = beams.detuning_Delta;
    const double g = beams.denominator_guard;
    const double d1 = guarded(D, g, "Delta");
    const double d2 = guarded(D - ion.omega_F, g, "Delta - omega_F");
    const cx pol = beams.pol_b.e_zero * beams.pol_r.e_plus +
                   beams.pol_b.e_minus * beams.pol_r.e_zero;
    return std::exp(cx(0, beams.phase_diff)) * (beams.g_b * beams.g_r / std::sqrt(6.0)) * pol *
           ion.omega_F / (d1 * d2);
}

cx displacement_rabi_be(const RamanBeamPair& beams, Spin spin, const IonSpecies& ion) {
    beams.validate();
    ion.validate();
    // Linear-perpendicular geometry: no pi component, balanced sigma
    // amplitudes on each beam; kappa carries the relative angle.
    const double b = std::abs(beams.pol_b.e_minus);
    const double r = std::abs(beams.pol_r.e_minus);
    if (std::abs(beams.pol_b.e_zero) > 1e-9 || std::abs(beams.pol_r.e_zero) > 1e-9 ||
        std::abs(std::abs(beams.pol_b.e_plus) - b) > 1e-9 ||
        std::abs(std::abs(beams.pol_r.e_plus) - r) > 1e-9)
        throw PreconditionError(
            "displacement_rabi_be requires linear perpendicular polarizations "
            "(no pi component, |e-| = |e+| per beam)");
    const double g = beams.denominator_guard;
    const double d1 = guarded(beams.detuning_Delta, g, "Delta");
    const double d2 = guarded(beams.detuning_Delta - ion.omega_F, g, "Delta - omega_F");
    const cx e2k = std::exp(cx(0, 2.0 * beams.kappa));
    cx bracket;
    if (spin == Spin::down)
        bracket = (2.0 / 3.0) / d1 + (1.0 / 3.0 + e2k) / d2;
    else
        bracket = (1.0 / 6.0 + e2k / 2.0) / d1 + (5.0 / 6.0 + e2k / 2.0) / d2;
    return std::exp(cx(0, beams.phase_diff)) * beams.g_b * beams.g_r * b * r * bracket;
}

double stark_shift_be(const RamanBeamPair& beams, double omega_F, double omega_0) {
    beams.validate();
    double sum = 0;
    for (const auto& t : stark_terms(beams, omega_F, omega_0))
        sum += t.weight / guarded(t.denom, beams.denominator_guard, t.name);
    return sum;
}

double stark_shift_be(const RamanBeamPair& beams, const IonSpecies& ion) {
    ion.validate();
    return stark_shift_be(beams, ion.omega_F, ion.omega_0);
}

double stark_shift_be_scale(const RamanBeamPair& beams, double omega_F, double omega_0) {
    double sum = 0;
    for (const auto& t : stark_terms(beams, omega_F, omega_0))
        sum += std::abs(t.weight / guarded(t.denom, beams.denominator_guard, t.name));
    return sum;
}

double stark_shift_be_approx(const RamanBeamPair& beams, double omega_F) {
    beams.validate();
    const double g = beams.denominator_guard;
    const double d1 = guarded(beams.detuning_Delta, g, "Delta");
    const double d2 = guarded(beams.detuning_Delta - omega_F, g, "Delta - omega_F");
    const double pol = sq(beams.g_b) * (sq(beams.pol_b.e_minus) - sq(beams.pol_b.e_plus)) +
                       sq(beams.g_r) * (sq(beams.pol_r.e_minus) - sq(beams.pol_r.e_plus));
    return pol * omega_F / (2.0 * d1 * d2);
}

double stark_shift_be_approx(const RamanBeamPair& beams, const IonSpecies& ion) {
    return stark_shift_be_approx(beams, ion.omega_F);
}

double se_rate_be(const RamanBeamPair& beams, double gamma, double omega_F, double omega_0,
                  double p_down, double p_up) {
    beams.validate();
    if (std::abs(p_down + p_up - 1.0) > 1e-9 || p_down < 0 || p_up < 0)
        throw PreconditionError("occupation probabilities must be >= 0 and sum to 1");
    const auto terms = stark_terms(beams, omega_F, omega_0);
    // Same weights against squared denominators. Terms with negative Stark
    // weight are couplings out of |down> and feed the p_down bucket; the
    // positive ones couple out of |up>.
    const double guard = beams.denominator_guard;
    auto t2 = [&](int i) {
        const double d = guarded(terms[i].denom, guard, terms[i].name);
        return std::abs(terms[i].weight) / (d * d);
    };
    const double down_sum = t2(2) + t2(3) + t2(6) + t2(7);
    const double up_sum = t2(0) + t2(1) + t2(4) + t2(5);
    return gamma * (p_down * down_sum + p_up * up_sum);
}

double se_rate_be(const RamanBeamPair& beams, const IonSpecies& ion, double p_down,
                  double p_up) {
    ion.validate();
    return se_rate_be(beams, ion.gamma, ion.omega_F, ion.omega_0, p_down, p_up);
}

double p_se_carrier_pi_be(const RamanBeamPair& beams, const IonSpecies& ion) {
    const double rabi = std::abs(carrier_rabi_be(beams, ion));
    if (rabi < 1e-30)
        throw ZeroRabi("carrier Rabi rate is zero for these beams");
    const double rate = se_rate_be(beams, ion, 0.5, 0.5);
    return rate * kPi / (2.0 * rabi); // tau_pi = pi / (2 |Omega|)
}

cx clock_rabi(const RamanBeamPair& beams, const IonSpecies& ion) {
    beams.validate();
    ion.validate();
    const double g = beams.denominator_guard;
    const double d1 = guarded(beams.detuning_Delta, g, "Delta");
    const double d2 = guarded(beams.detuning_Delta - ion.omega_F, g, "Delta - omega_F");
    const cx pol = beams.pol_b.e_minus * beams.pol_r.e_minus -
                   beams.pol_b.e_plus * beams.pol_r.e_plus;
    return std::exp(cx(0, beams.phase_diff)) * beams.g_b * beams.g_r * ion.omega_F /
           (3.0 * d1 * d2) * pol;
}

double clock_se_rate(const RamanBeamPair& beams, const IonSpecies& ion) {
    beams.validate();
    const double g = beams.denominator_guard;
    const double d1 = guarded(beams.detuning_Delta, g, "Delta");
    const double d2 = guarded(beams.detuning_Delta - ion.omega_F, g, "Delta - omega_F");
    return ion.gamma * (sq(beams.g_b) + sq(beams.g_r)) / 3.0 *
           (1.0 / (d1 * d1) + 2.0 / (d2 * d2));
}

double clock_stark(const RamanBeamPair& beams, const IonSpecies& ion) {
    beams.validate();
    const double g = beams.denominator_guard;
    const double d1 = guarded(beams.detuning_Delta, g, "Delta");
    const double d2 = guarded(beams.detuning_Delta - ion.omega_F, g, "Delta - omega_F");
    return -(sq(beams.g_b) + sq(beams.g_r)) * ion.omega_0 / 3.0 *
           (1.0 / (d1 * d1) + 2.0 / (d2 * d2));
}

double p_se_clock_pi(const IonSpecies& ion) {
    ion.validate();
    return 2.0 * std::sqrt(2.0) * kPi * ion.gamma / ion.omega_F;
}

double stark_over_rabi_clock(const IonSpecies& ion) {
    ion.validate();
    return 4.0 * std::sqrt(2.0) * ion.omega_0 / ion.omega_F;
}

} // namespace iontrap
