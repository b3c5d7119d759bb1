#pragma once

#include "hausdorff/operator_spec.hpp"

namespace hausdorff {

/// n-dimensional Cesaro operator: Omega = [0,1]^n, Phi = 1,
/// A(u) = diag[u_1..u_n], acting on L^p (default p = 2).
OperatorSpec builtin_cesaro(int n, double p = 2.0);

/// (C,k) mean: n = 1, Omega = [0,1], Phi(u) = k (1-u)^{k-1}, A(u) = u.
/// k in (0,1) has an integrable endpoint singularity; the quadrature
/// backbone is graded toward u = 1 in that case. Rejects k <= 0.
OperatorSpec builtin_ck(double k, double p = 2.0);

/// Discrete Hausdorff operator: unit weights on {0..K} with K+1 kernel
/// values and the given commuting family indexed by the atom coordinate.
OperatorSpec builtin_discrete(std::vector<cplx> kernel_values,
                              CommutingFamily family, double p = 2.0);

/// Single-atom identity operator in dimension n.
OperatorSpec builtin_identity(int n, double p = 2.0);

/// Geometric fixture from the worked example: Phi(k) = (1/2)^k,
/// A(k) = 4^k, truncated at K.
OperatorSpec builtin_geometric(int truncation = 40, double p = 2.0);

/// Discrete operator with atoms {-K..K}, Phi(+-k) = coeff[k] * lambda^{+-k/2},
/// A(k) = lambda^k. The det-scaled weights pair conjugately, so the symbol
/// is real and the operator self-adjoint.
OperatorSpec builtin_symmetrized(double lambda, std::vector<double> coeffs,
                                 double p = 2.0);

}  // namespace hausdorff
