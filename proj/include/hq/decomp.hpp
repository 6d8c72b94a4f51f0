#pragma once

#include <cstddef>
#include <vector>

#include "hq/matrix.hpp"

namespace hq {

/// Thin SVD m = left * diag(singular_values) * dagger(right).
/// singular_values are sorted descending; left (rows x k) and right (cols x k)
/// have orthonormal columns, k = min(rows, cols).
struct SvdResult {
    std::vector<double> singular_values;
    ComplexMatrix left;
    ComplexMatrix right;
};

/// One-sided Jacobi SVD. Off-diagonal convergence tolerance 1e-12; throws
/// NumericalFailure with the sweep count if it fails to settle.
SvdResult svd(const ComplexMatrix& m);

/// Singular values below this are treated as zero for rank / Schmidt-number
/// purposes.
constexpr double kSingularValueCutoff = 1e-10;

/// Realignment of a two-site operator q on dims (dA, dB): result is
/// dA^2 x dB^2 with R[(i1*dA+j1),(i2*dB+j2)] = Q[(i1*dB+i2),(j1*dB+j2)].
/// The singular values of the result are the operator Schmidt coefficients.
ComplexMatrix realign(const ComplexMatrix& q, std::size_t dim_a, std::size_t dim_b);

/// Eigendecomposition h = vectors * diag(eigenvalues) * dagger(vectors) of a
/// Hermitian matrix; eigenvalues ascending.
struct HermitianEigen {
    std::vector<double> eigenvalues;
    ComplexMatrix vectors;
};

HermitianEigen eigh(const ComplexMatrix& h);

}  // namespace hq
