#pragma once

// Tanh-sinh quadrature on (0,1).
//
// Nodes are t = 1/(1+w), w = exp(-pi sinh s); the integrand receives both t
// and 1-t = w/(1+w) so that endpoint singularities in (1-t) keep full
// relative accuracy.

#include "borwein/result.hpp"

#include <functional>

namespace borwein::quad {

using Integrand = std::function<Real(const Real& t, const Real& one_minus_t)>;

/// Halves the step until two successive levels differ by <= tol; the
/// last difference is the error estimate. Throws PrecisionError after
/// max_level halvings.
SeriesResult quad_de(const Integrand& f, const Real& tol, const Precision& prec, int max_level = 10);

}  // namespace borwein::quad
