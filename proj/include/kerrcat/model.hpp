#pragma once

#include <array>
#include <string>
#include <vector>

#include "kerrcat/errors.hpp"

namespace kerrcat {

// Bath sampling points as multiples of omega_d/2: 0, 1, 2, 3, 4, 5.
enum class BathLabel { Dc, Half, One, ThreeHalf, Two, FiveHalf };

inline constexpr std::array<BathLabel, 6> kAllBathLabels = {
    BathLabel::Dc,  BathLabel::Half, BathLabel::One,
    BathLabel::ThreeHalf, BathLabel::Two, BathLabel::FiveHalf};

int half_multiple(BathLabel label);
const char* to_string(BathLabel label);

// Physical inputs of the squeezed Kerr oscillator. All frequencies are
// angular (rad/s); rates are 1/s.
struct ModelParams {
    double g3 = 0.0;         // third-rank nonlinearity
    double g4 = 0.0;         // fourth-rank nonlinearity
    double omega_d = 0.0;    // drive frequency
    double delta_eff = 0.0;  // renormalized detuning Delta
    double epsilon2 = 0.0;   // squeezing amplitude, real >= 0
    double kappa_2ph = 0.0;  // engineered two-photon cooling rate
    bool cooling_bare = false;  // jump a^2 instead of a^2 - alpha^2
};

struct BathPoint {
    double kappa = 0.0;        // 1/s
    double temperature = 0.0;  // K
};

// The DC channel supplies the rate products kappa0*nbar0 and kappa0*(1+nbar0)
// directly; nbar diverges at omega = 0 while the product stays finite.
struct DcRates {
    double heat = 0.0;  // kappa0 * nbar0
    double loss = 0.0;  // kappa0 * (1 + nbar0)
};

struct BathSpectrum {
    BathPoint half;
    BathPoint one;
    BathPoint three_half;
    BathPoint two;
    BathPoint five_half;
    DcRates dc;

    // Thermal points only; throws InvalidFrequency for Dc.
    const BathPoint& at(BathLabel label) const;
};

// Hard invariant violations throw; soft issues are returned as warnings.
std::vector<std::string> validate(const ModelParams& p);
std::vector<std::string> validate(const BathSpectrum& b);

// K = -3 g4 / 2 + 20 g3^2 / (3 omega_d)
double kerr_coefficient(const ModelParams& p);

// |Pi| = eps2 / g3, taken real and non-negative
double pi_amplitude(const ModelParams& p);

// Bose-Einstein occupation 1 / (exp(hbar omega / kB T) - 1)
double thermal_occupation(double omega, double temperature);

// |alpha|^2 = eps2 / K
double alpha_squared(const ModelParams& p);

double bath_frequency(BathLabel label, double omega_d);

// nbar at the sampled bath frequency; Dc is not a thermal point
double occupation(const BathSpectrum& b, BathLabel label, double omega_d);

} // namespace kerrcat
