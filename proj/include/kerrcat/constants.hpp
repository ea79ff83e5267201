#pragma once

namespace kerrcat {

// CODATA 2018 exact values
inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K

inline constexpr double kTwoPi = 6.2831853071795864769;

} // namespace kerrcat
