#pragma once

#include <cstdint>
#include <vector>

#include "weylcdma/types.hpp"

namespace weylcdma {

/// Parameters of a Weyl spreading sequence: chip n (1-based) equals
/// exp(2*pi*j*(n-1)*(k/N + sigma)).
struct WeylParams {
    int k = 1;            // user index, 1 <= k <= length
    int length = 1;       // sequence length N >= 1
    double sigma = 0.0;   // offset, 0 <= sigma < 1
};

/// Parameters of a Gold code. Polynomials are bit masks with bit i set
/// when x^i has coefficient 1 (bit `degree` and bit 0 are always set for
/// a valid characteristic polynomial).
struct GoldParams {
    int degree = 6;
    std::uint32_t taps_a = 0;   // 0 selects the built-in pair for `degree`
    std::uint32_t taps_b = 0;
    std::uint32_t seed_a = 0;   // 0 selects the all-ones register
    std::uint32_t seed_b = 0;
    int shift = 0;              // relative offset of register B, in [0, N-1]
};

/// Built-in polynomial pair for degrees 3..10. Degrees 3, 5, 6, 7, 9 and 10
/// are preferred pairs (three-valued cross-correlation at the t(n) bound);
/// degrees 4 and 8 have no preferred pairs, so the pair with the smallest
/// exhaustively measured correlation maximum is used instead.
struct PolynomialPair {
    std::uint32_t a;
    std::uint32_t b;
    int correlation_peak;  // max |unnormalized periodic cross-correlation| of the family
};
PolynomialPair default_gold_pair(int degree);

/// w_{k,n} = exp(2*pi*j*(n-1)*(k/N + sigma)), n = 1..N. The rational part
/// of the chip angle is reduced in integer arithmetic so long sequences do
/// not lose precision.
ComplexVector weyl_sequence(const WeylParams& params);

/// Raw m-sequence bits (0/1) of length 2^degree - 1 from a Fibonacci LFSR.
/// Throws std::invalid_argument for a zero seed or malformed taps, and
/// std::runtime_error when the polynomial is not primitive (short period).
std::vector<std::uint8_t> m_sequence(int degree, std::uint32_t taps, std::uint32_t seed);

/// BPSK-mapped Gold sequence (bit 0 -> +1, bit 1 -> -1): XOR of m-sequence A
/// with m-sequence B cyclically advanced by `shift`. All chips are real +-1.
ComplexVector gold_sequence(const GoldParams& params);

/// True iff every chip has unit modulus within `tol` (the constant power set).
bool validate_membership(const Eigen::Ref<const ComplexVector>& seq, double tol = 1e-12);

}  // namespace weylcdma
