#ifndef FAMZV_QUAD_HPP
#define FAMZV_QUAD_HPP

#include <vector>

#include "famzv/indices.hpp"

namespace famzv {

// Interval functions on (0,1):
//   j = +1: log((1-t1)/(1-t2))   j = -1: log((1+t1)/(1+t2))   j = 0: log(t2/t1)
double L_form(int j, double t1, double t2);

// Partial sum of the defining series with a geometric tail bound below tol.
// Requires 0 < z <= 0.75 and tol >= 1e-12. Throws on non-convergence.
double li_numeric(const SignedIndex& idx, double z, double tol);

// Nested Gauss-Legendre evaluation of the simplex integral: one form
// dt/(eta - t) opening each block, |a_i| - 1 copies of dt/t following.
// Requires weight <= 3.
double iterint_numeric(const SignedIndex& idx, double z, int nodes_per_level);

// Gauss-Legendre nodes and weights on (-1, 1).
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

}  // namespace famzv

#endif
