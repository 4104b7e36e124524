// Bracketed scalar minimization and root finding (Brent's methods).
// Objectives here are smooth rational functions, so derivative-free
// golden-section/parabolic iteration is accurate and cheap.

#pragma once

#include <functional>

#include "iontrap/errors.hpp"

namespace iontrap {

struct MinimizeResult {
    double x = 0;
    double f = 0;
    int evaluations = 0;
};

// Minimizes f on [a, b] to relative x tolerance rel_tol. Throws NoMinimum
// when the bracket holds no interior minimum (monotone objective).
MinimizeResult brent_minimize(const std::function<double(double)>& f, double a, double b,
                              double rel_tol = 1e-8, int max_iter = 200);

// Root of f on [a, b]; requires a sign change (throws NoSignChange).
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double x_tol = 1e-14, int max_iter = 200);

} // namespace iontrap
