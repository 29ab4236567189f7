#pragma once

#include <doctest.h>

// doctest's Approx carries an additive scale of 1.0 by default, which
// turns epsilon into an absolute tolerance for values far below unity.
// Most quantities here live between 1e-61 and 1e15, so comparisons are
// made purely relative.
inline doctest::Approx rel(double expected, double epsilon = 1e-12) {
    return doctest::Approx(expected).epsilon(epsilon).scale(0.0);
}
