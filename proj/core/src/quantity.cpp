#include "qtide/quantity.hpp"

#include <cmath>
#include <sstream>

namespace qtide {

namespace {

const char* const kBaseUnits[7] = {"m", "kg", "s", "A", "K", "mol", "cd"};

[[noreturn]] void throw_mismatch(const char* op, const Dimension& a, const Dimension& b) {
    throw DimensionError(std::string(op) + " of quantities with incompatible dimensions: " +
                         dimension_to_string(a) + " vs " + dimension_to_string(b));
}

} // namespace

std::string dimension_to_string(const Dimension& dim) {
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < 7; ++i) {
        if (dim[i] == 0) continue;
        if (any) out << ' ';
        out << kBaseUnits[i];
        if (dim[i] != 1) out << '^' << dim[i];
        any = true;
    }
    return any ? out.str() : "1";
}

Quantity Quantity::operator+(const Quantity& rhs) const {
    if (dim != rhs.dim) throw_mismatch("addition", dim, rhs.dim);
    return {value + rhs.value, dim};
}

Quantity Quantity::operator-(const Quantity& rhs) const {
    if (dim != rhs.dim) throw_mismatch("subtraction", dim, rhs.dim);
    return {value - rhs.value, dim};
}

Quantity Quantity::operator*(const Quantity& rhs) const {
    Dimension d;
    for (int i = 0; i < 7; ++i) d[i] = dim[i] + rhs.dim[i];
    return {value * rhs.value, d};
}

Quantity Quantity::operator/(const Quantity& rhs) const {
    Dimension d;
    for (int i = 0; i < 7; ++i) d[i] = dim[i] - rhs.dim[i];
    return {value / rhs.value, d};
}

Quantity pow(const Quantity& q, int exponent) {
    Dimension d;
    for (int i = 0; i < 7; ++i) d[i] = q.dim[i] * exponent;
    return {std::pow(q.value, exponent), d};
}

Quantity sqrt(const Quantity& q) {
    Dimension d;
    for (int i = 0; i < 7; ++i) {
        if (q.dim[i] % 2 != 0)
            throw DimensionError("sqrt of quantity with odd exponent: " + dimension_to_string(q.dim));
        d[i] = q.dim[i] / 2;
    }
    return {std::sqrt(q.value), d};
}

} // namespace qtide
