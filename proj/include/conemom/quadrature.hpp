#pragma once

#include <functional>

namespace conemom {

struct QuadratureOptions {
    double abs_tol = 1e-12;
    long max_intervals = 4096;
};

struct QuadratureResult {
    double value = 0;
    double error = 0; // estimated absolute error bound
    long intervals = 0;
};

// Globally adaptive Gauss(7)/Kronrod(15) quadrature: the segment with the
// largest error estimate is split until the estimated total error falls
// under abs_tol.  Endpoints are never evaluated (all nodes are interior),
// so integrable endpoint singularities are fine.  Throws
// errc::quadrature_budget_exceeded when max_intervals segments are not
// enough.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opt = {});

} // namespace conemom
