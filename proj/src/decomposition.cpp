#include "weylcdma/decomposition.hpp"

#include <stdexcept>
#include <string>

#include "weylcdma/sequences.hpp"

namespace weylcdma {

namespace {

BitCase basis_for(CoefficientKind kind) {
    return kind == CoefficientKind::alpha ? BitCase::same_bits : BitCase::different_bits;
}

}  // namespace

CoefficientVector decompose(const Eigen::Ref<const ComplexVector>& seq, CoefficientKind kind) {
    if (seq.size() == 0) throw std::invalid_argument("decompose: empty sequence");
    if (!validate_membership(seq))
        throw std::domain_error("decompose: sequence chips must have unit modulus");
    const auto& sys = eigensystem(basis_for(kind), static_cast<int>(seq.size()));
    CoefficientVector out;
    out.kind = kind;
    out.values = sys.basis().adjoint() * seq;
    return out;
}

ComplexVector reconstruct(const CoefficientVector& coeffs) {
    if (coeffs.values.size() == 0)
        throw std::invalid_argument("reconstruct: empty coefficient vector");
    const auto& sys = eigensystem(basis_for(coeffs.kind), static_cast<int>(coeffs.values.size()));
    return sys.basis() * coeffs.values;
}

BasisChange basis_change(int dim) {
    if (dim < 1) throw std::invalid_argument("basis_change: dim must be positive");
    BasisChange bc;
    bc.phi.resize(dim, dim);
    bc.phi_hat.resize(dim, dim);
    const double scale = 2.0 / dim;
    for (int p = 0; p < dim; ++p) {
        for (int q = 0; q < dim; ++q) {
            // Entries depend on (q - p) mod N only; the offsets 1/(2N) and
            // -1/(2N) keep the denominator phase an odd multiple of
            // pi/N, so it never hits 1.
            int r = ((q - p) % dim + dim) % dim;
            int t_plus = 2 * r + 1;               // (q-p)/N + 1/(2N), over 2N
            int t_minus = (2 * r - 1 + 2 * dim) % (2 * dim);
            bc.phi(p, q) = scale / (1.0 - std::polar(1.0, kTwoPi * t_plus / (2.0 * dim)));
            bc.phi_hat(p, q) = scale / (1.0 - std::polar(1.0, kTwoPi * t_minus / (2.0 * dim)));
        }
    }
    return bc;
}

CoefficientVector convert(const CoefficientVector& coeffs, const BasisChange& bc) {
    const auto n = coeffs.values.size();
    if (n == 0) throw std::invalid_argument("convert: empty coefficient vector");
    if (bc.phi.rows() != n || bc.phi_hat.rows() != n)
        throw std::invalid_argument("convert: basis change dimension mismatch");
    CoefficientVector out;
    if (coeffs.kind == CoefficientKind::beta) {
        out.kind = CoefficientKind::alpha;
        out.values = bc.phi * coeffs.values;
    } else {
        out.kind = CoefficientKind::beta;
        out.values = bc.phi_hat * coeffs.values;
    }
    return out;
}

Complex despread_via_coefficients(const CoefficientVector& ci, const CoefficientVector& ck,
                                  int gap, BitCase kind) {
    if (ci.values.size() != ck.values.size())
        throw std::invalid_argument("despread_via_coefficients: size mismatch");
    if (ci.kind != ck.kind)
        throw std::invalid_argument("despread_via_coefficients: coefficient kinds differ");
    const CoefficientKind wanted =
        kind == BitCase::same_bits ? CoefficientKind::alpha : CoefficientKind::beta;
    if (ci.kind != wanted)
        throw std::invalid_argument(
            "despread_via_coefficients: same-bit case needs alpha coefficients, "
            "different-bit case needs beta");
    const int dim = static_cast<int>(ci.values.size());
    const auto& sys = eigensystem(kind, dim);
    ComplexVector lambda = sys.eigenvalues(gap);
    return (lambda.array() * ci.values.array().conjugate() * ck.values.array()).sum();
}

}  // namespace weylcdma
