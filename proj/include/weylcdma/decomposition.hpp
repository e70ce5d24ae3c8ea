#pragma once

#include "weylcdma/spectral.hpp"
#include "weylcdma/types.hpp"

namespace weylcdma {

/// Expansion coefficients of a spreading sequence in one of the two Weyl
/// bases. Entry m-1 holds the coefficient of w_m. For any constant-power
/// sequence the coefficient energy sums to N (Parseval).
struct CoefficientVector {
    CoefficientKind kind = CoefficientKind::alpha;
    ComplexVector values;
};

/// The two conversion matrices between alpha and beta coefficients,
/// both carrying the 1/N prefactor:
///   phi[p][q]     = (1/N) * 2 / (1 - exp(2 pi j ((q-p)/N + 1/(2N))))
///   phi_hat[p][q] = (1/N) * 2 / (1 - exp(2 pi j ((q-p)/N - 1/(2N))))
/// alpha = phi * beta and beta = phi_hat * alpha; the two compose to the
/// identity.
struct BasisChange {
    ComplexMatrix phi;
    ComplexMatrix phi_hat;
};

/// alpha_m = (1/sqrt(N)) <w_m(0), s>, beta_m = (1/sqrt(N)) <w_m(1/(2N)), s>.
/// Throws std::domain_error when the input is not unit-modulus.
CoefficientVector decompose(const Eigen::Ref<const ComplexVector>& seq, CoefficientKind kind);

/// Inverse of decompose: (1/sqrt(N)) sum_m values[m] w_m(kind basis).
ComplexVector reconstruct(const CoefficientVector& coeffs);

BasisChange basis_change(int dim);

/// Applies phi (beta -> alpha) or phi_hat (alpha -> beta).
CoefficientVector convert(const CoefficientVector& coeffs, const BasisChange& bc);

/// Despreading correlation evaluated as the eigenvalue-weighted coefficient
/// sum: sum_m lambda^(gap)_m conj(ci_m) ck_m. `kind` selects the eigenvalue
/// family and must pair with the coefficient basis (same_bits <-> alpha,
/// different_bits <-> beta). Equals the quadratic form under the default
/// despreading context.
Complex despread_via_coefficients(const CoefficientVector& ci, const CoefficientVector& ck,
                                  int gap, BitCase kind);

}  // namespace weylcdma
