#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace weylcdma {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// The two consecutive data bits an interferer straddles during one
/// despreading window: `prev` is the bit ending as the window opens,
/// `cur` the bit that follows. Both are +1 or -1.
struct BitPair {
    int prev = 1;
    int cur = 1;

    BitPair() = default;
    BitPair(int prev_bit, int cur_bit) : prev(prev_bit), cur(cur_bit) {
        if ((prev != 1 && prev != -1) || (cur != 1 && cur != -1))
            throw std::invalid_argument("BitPair: bits must be +1 or -1");
    }

    bool same() const { return prev == cur; }
};

/// Carrier phase and chip width entering the despreading correlation.
/// Defaults are the simplified setting (phase 0, unit chip width).
struct DespreadContext {
    double phase = 0.0;       // radians, in [0, 2*pi)
    double chip_width = 1.0;  // seconds, > 0
};

/// Selects which consecutive-bit case a shift operator family represents:
/// `same_bits` covers (+1,+1)/(-1,-1) (cyclic shifts), `different_bits`
/// covers (-1,+1)/(+1,-1) (negacyclic shifts).
enum class BitCase { same_bits, different_bits };

/// Basis tag for coefficient vectors: alpha coefficients live in the
/// sigma = 0 Weyl basis, beta coefficients in the sigma = 1/(2N) basis.
enum class CoefficientKind { alpha, beta };

/// Spreading-sequence family selector for the simulator and CLI.
enum class Family { weyl, gold };

}  // namespace weylcdma
