#pragma once

#include <numbers>

namespace picolink::constants {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;

inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kBoltzmann = 1.380649e-23;            // J/K
inline constexpr double kGmSun = 1.32712440018e20;            // m^3/s^2
inline constexpr double kAu = 1.495978707e11;                 // m
inline constexpr double kGeoRadius = 4.2164e7;                // m, distance yardstick

inline constexpr double kArcsec = kPi / (180.0 * 3600.0);     // rad

}  // namespace picolink::constants
