#pragma once

#include <optional>

#include "hausdorff/functions.hpp"
#include "hausdorff/mellin.hpp"
#include "hausdorff/symbol.hpp"

namespace hausdorff {

/// The Mellin transform diagonalizes the operator: M(Hf) = phi * M(f).
/// This certificate computes both sides through independent routes
/// (x-space quadrature + FFT transform on one side, the symbol on the
/// other) and returns ||M(Hf) - phi M f||_2 / ||M f||_2 on the frequency
/// grid. Requires p = 2 and a diagonal family (rotate the frame first
/// otherwise). Separable spec + tensor f runs axis by axis and combines
/// through Gram identities, which keeps n = 2, 3 certificates at 1-d cost.
double diagonalization_residual(const OperatorSpec& spec, const ScalarField& f,
                                const MellinGrid& grid,
                                const std::optional<Symbol>& symbol = std::nullopt);

/// x -> f(Cx) for orthogonal C (defect tolerance 1e-10). Composing with
/// the transposed frame restores f.
ScalarField rotate_frame(const ScalarField& f, std::span<const double> c_row_major,
                         int n);

}  // namespace hausdorff
