#include "kerrcat/model.hpp"

#include <cmath>

#include "kerrcat/constants.hpp"

namespace kerrcat {

int half_multiple(BathLabel label) {
    switch (label) {
        case BathLabel::Dc: return 0;
        case BathLabel::Half: return 1;
        case BathLabel::One: return 2;
        case BathLabel::ThreeHalf: return 3;
        case BathLabel::Two: return 4;
        case BathLabel::FiveHalf: return 5;
    }
    throw Error("unknown bath label");
}

const char* to_string(BathLabel label) {
    switch (label) {
        case BathLabel::Dc: return "dc";
        case BathLabel::Half: return "half";
        case BathLabel::One: return "one";
        case BathLabel::ThreeHalf: return "three_half";
        case BathLabel::Two: return "two";
        case BathLabel::FiveHalf: return "five_half";
    }
    return "?";
}

const BathPoint& BathSpectrum::at(BathLabel label) const {
    switch (label) {
        case BathLabel::Half: return half;
        case BathLabel::One: return one;
        case BathLabel::ThreeHalf: return three_half;
        case BathLabel::Two: return two;
        case BathLabel::FiveHalf: return five_half;
        case BathLabel::Dc: break;
    }
    throw InvalidFrequency("DC entry holds rate products, not a thermal point");
}

std::vector<std::string> validate(const ModelParams& p) {
    if (p.omega_d <= 0.0) throw DegenerateParams("omega_d must be positive");
    if (p.epsilon2 < 0.0) throw DegenerateParams("epsilon2 must be non-negative");
    if (p.kappa_2ph < 0.0) throw DegenerateParams("kappa_2ph must be non-negative");

    std::vector<std::string> warnings;
    if (std::abs(p.g3) > p.omega_d / 10.0)
        warnings.push_back("g3 exceeds omega_d/10; weak-nonlinearity expansion is suspect");
    if (std::abs(p.g4) > p.omega_d / 10.0)
        warnings.push_back("g4 exceeds omega_d/10; weak-nonlinearity expansion is suspect");
    return warnings;
}

std::vector<std::string> validate(const BathSpectrum& b) {
    for (BathLabel label : {BathLabel::Half, BathLabel::One, BathLabel::ThreeHalf,
                            BathLabel::Two, BathLabel::FiveHalf}) {
        const BathPoint& pt = b.at(label);
        if (pt.kappa < 0.0) throw NegativeRate("bath kappa must be non-negative");
        if (pt.temperature < 0.0) throw Error("bath temperature must be non-negative");
    }
    if (b.dc.heat < 0.0 || b.dc.loss < 0.0)
        throw NegativeRate("DC rate products must be non-negative");

    std::vector<std::string> warnings;
    if (b.dc.heat > 0.0 || b.dc.loss > 0.0)
        warnings.push_back("nonzero DC channel; the thermal-oscillator bath model has kappa_0 = 0");
    return warnings;
}

double kerr_coefficient(const ModelParams& p) {
    if (p.omega_d <= 0.0) throw DegenerateParams("omega_d must be positive");
    return -1.5 * p.g4 + 20.0 * p.g3 * p.g3 / (3.0 * p.omega_d);
}

double pi_amplitude(const ModelParams& p) {
    if (p.epsilon2 == 0.0) return 0.0;
    if (p.g3 == 0.0)
        throw DegenerateParams("epsilon2 > 0 requires g3 != 0 (eps2 = g3*Pi)");
    return p.epsilon2 / p.g3;
}

double thermal_occupation(double omega, double temperature) {
    if (omega <= 0.0) throw InvalidFrequency("thermal occupation requires omega > 0");
    if (temperature < 0.0) throw Error("temperature must be non-negative");
    if (temperature == 0.0) return 0.0;
    const double x = kHbar * omega / (kBoltzmann * temperature);
    if (x > 700.0) return 0.0;  // below double underflow
    return 1.0 / std::expm1(x);
}

double alpha_squared(const ModelParams& p) {
    if (p.epsilon2 == 0.0) return 0.0;
    const double k = kerr_coefficient(p);
    if (k == 0.0)
        throw DegenerateParams("epsilon2 > 0 requires K != 0 (alpha^2 = eps2/K)");
    const double a2 = p.epsilon2 / k;
    if (a2 < 0.0)
        throw DegenerateParams("eps2/K < 0: no real coherent amplitude");
    return a2;
}

double bath_frequency(BathLabel label, double omega_d) {
    return 0.5 * omega_d * half_multiple(label);
}

double occupation(const BathSpectrum& b, BathLabel label, double omega_d) {
    const BathPoint& pt = b.at(label);
    return thermal_occupation(bath_frequency(label, omega_d), pt.temperature);
}

} // namespace kerrcat
