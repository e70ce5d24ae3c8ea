#pragma once

#include "weylcdma/correlation.hpp"
#include "weylcdma/types.hpp"

namespace weylcdma {

/// Closed-form eigensystem shared by every gap length of one bit case.
///
/// same_bits:      lambda^(l)_m = exp(-2 pi j m l / N),        v_m = w_m(0)/sqrt(N)
/// different_bits: lambda^(l)_m = exp(-2 pi j l (m/N + 1/2N)), v_m = w_m(1/(2N))/sqrt(N)
///
/// The eigenvector index m runs 1..N to line up with the Weyl user index;
/// column m-1 of basis() holds v_m.
class EigenSystem {
  public:
    EigenSystem(BitCase kind, int dim);

    BitCase kind() const { return kind_; }
    int dim() const { return dim_; }

    /// Unitary basis matrix V (columns are the normalized Weyl sequences).
    const ComplexMatrix& basis() const { return basis_; }

    /// Closed-form eigenvalue lambda^(gap)_m, m in 1..N. The phase is
    /// reduced in integer arithmetic, so |lambda| = 1 to machine precision.
    Complex eigenvalue(int m, int gap) const;

    /// All N eigenvalues for one gap, ordered m = 1..N.
    ComplexVector eigenvalues(int gap) const;

    /// The bit pair whose shift operators this eigensystem diagonalizes.
    BitPair canonical_bits() const {
        return kind_ == BitCase::same_bits ? BitPair(1, 1) : BitPair(-1, 1);
    }

  private:
    BitCase kind_;
    int dim_;
    ComplexMatrix basis_;
};

/// Shared, lazily built eigensystem per (kind, dim). The returned reference
/// stays valid for the life of the process; construction is synchronized.
const EigenSystem& eigensystem(BitCase kind, int dim);

/// Frobenius norm of materialize(B^(gap)) - V Lambda^(gap) V^*.
/// Contract: residual <= 1e-9 * dim. Guarded to dim <= 512.
double verify_diagonalization(BitCase kind, int dim, int gap);

/// True iff applying the gap-`gap` shift operator to basis column m (signed
/// permutation path, no dense matrix) reproduces eigenvalue(m, gap) times the
/// column within 1e-10 per entry, and eigenvalue(m, gap) equals
/// eigenvalue(m, 1)^gap within 1e-10.
bool eigen_relation_check(BitCase kind, int dim, int m, int gap);

}  // namespace weylcdma
