#ifndef QSTAB_QUADRATURE_HPP
#define QSTAB_QUADRATURE_HPP

#include <functional>

namespace qstab {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
/// Handles integrable endpoint singularities by capping recursion depth;
/// intended for smooth-to-mildly-singular 1-D integrands.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth = 48);

}  // namespace qstab

#endif
