#pragma once

#include <array>
#include <string>

#include "qtide/errors.hpp"

namespace qtide {

/// Integer exponents over the SI base units, ordered (m, kg, s, A, K, mol, cd).
using Dimension = std::array<int, 7>;

inline constexpr Dimension dim_dimensionless{0, 0, 0, 0, 0, 0, 0};
inline constexpr Dimension dim_length{1, 0, 0, 0, 0, 0, 0};
inline constexpr Dimension dim_mass{0, 1, 0, 0, 0, 0, 0};
inline constexpr Dimension dim_time{0, 0, 1, 0, 0, 0, 0};
inline constexpr Dimension dim_charge{0, 0, 1, 1, 0, 0, 0};
inline constexpr Dimension dim_frequency{0, 0, -1, 0, 0, 0, 0};
inline constexpr Dimension dim_acceleration{1, 0, -2, 0, 0, 0, 0};
inline constexpr Dimension dim_energy{2, 1, -2, 0, 0, 0, 0};
inline constexpr Dimension dim_force{1, 1, -2, 0, 0, 0, 0};
inline constexpr Dimension dim_action{2, 1, -1, 0, 0, 0, 0};             // J s
inline constexpr Dimension dim_permittivity{-3, -1, 4, 2, 0, 0, 0};      // F/m
inline constexpr Dimension dim_magnetic_moment{2, 0, 0, 1, 0, 0, 0};     // J/T
inline constexpr Dimension dim_magnetic_flux{2, 1, -2, -1, 0, 0, 0};     // Wb
inline constexpr Dimension dim_gravitational_constant{3, -1, -2, 0, 0, 0, 0};
inline constexpr Dimension dim_voltage{2, 1, -3, -1, 0, 0, 0};

/// Renders exponents as e.g. "m^2 kg s^-3 A^-1"; "1" when dimensionless.
std::string dimension_to_string(const Dimension& dim);

/// A real value tagged with its SI dimension. Addition and subtraction
/// reject mismatched dimensions; multiplication and division combine the
/// exponent vectors. Immutable in spirit: every operation returns a new
/// value.
struct Quantity {
    double value{0.0};
    Dimension dim{dim_dimensionless};

    Quantity operator+(const Quantity& rhs) const;
    Quantity operator-(const Quantity& rhs) const;
    Quantity operator*(const Quantity& rhs) const;
    Quantity operator/(const Quantity& rhs) const;
    Quantity operator*(double scalar) const { return {value * scalar, dim}; }
    Quantity operator/(double scalar) const { return {value / scalar, dim}; }
};

inline Quantity operator*(double scalar, const Quantity& q) { return q * scalar; }

/// Integer power; exponents scale accordingly.
Quantity pow(const Quantity& q, int exponent);

/// Square root; every exponent must be even, otherwise DimensionError.
Quantity sqrt(const Quantity& q);

} // namespace qtide
