#include "weylcdma/sequences.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace weylcdma {

PolynomialPair default_gold_pair(int degree) {
    switch (degree) {
        case 3:  return {0x00B, 0x00D, 5};    // x^3+x+1, x^3+x^2+1
        case 4:  return {0x013, 0x019, 7};    // x^4+x+1, x^4+x^3+1 (no preferred pair exists)
        case 5:  return {0x025, 0x03D, 9};    // x^5+x^2+1, x^5+x^4+x^3+x^2+1
        case 6:  return {0x043, 0x067, 17};   // x^6+x+1, x^6+x^5+x^2+x+1
        case 7:  return {0x089, 0x08F, 17};   // x^7+x^3+1, x^7+x^3+x^2+x+1
        case 8:  return {0x11D, 0x12D, 31};   // x^8+x^4+x^3+x^2+1, x^8+x^5+x^3+x^2+1 (no preferred pair exists)
        case 9:  return {0x211, 0x21B, 33};   // x^9+x^4+1, x^9+x^4+x^3+x+1
        case 10: return {0x409, 0x46F, 65};   // x^10+x^3+1, x^10+x^6+x^5+x^3+x^2+x+1
        default:
            throw std::invalid_argument("default_gold_pair: degree must be in [3, 10]");
    }
}

ComplexVector weyl_sequence(const WeylParams& params) {
    const int n = params.length;
    const int k = params.k;
    if (n < 1)
        throw std::invalid_argument("weyl_sequence: length must be >= 1");
    if (k < 1 || k > n)
        throw std::invalid_argument("weyl_sequence: k must satisfy 1 <= k <= length");
    if (!(params.sigma >= 0.0 && params.sigma < 1.0))
        throw std::invalid_argument("weyl_sequence: sigma must satisfy 0 <= sigma < 1");

    ComplexVector chips(n);
    for (int i = 0; i < n; ++i) {
        // angle/(2*pi) = (i*k mod N)/N + frac(i*sigma), reduced to [0, 1)
        const double rational = static_cast<double>((static_cast<std::int64_t>(i) * k) % n) / n;
        double frac = rational + std::fmod(i * params.sigma, 1.0);
        frac -= std::floor(frac);
        chips[i] = std::polar(1.0, kTwoPi * frac);
    }
    return chips;
}

std::vector<std::uint8_t> m_sequence(int degree, std::uint32_t taps, std::uint32_t seed) {
    if (degree < 2 || degree > 24)
        throw std::invalid_argument("m_sequence: degree out of range");
    const std::uint32_t top = 1u << degree;
    const std::uint32_t mask = top - 1;
    if (taps == 0 || (taps & top) == 0 || (taps & 1u) == 0 || (taps >> (degree + 1)) != 0)
        throw std::invalid_argument("m_sequence: taps must describe x^degree + ... + 1");
    if (seed == 0 || (seed & ~mask) != 0)
        throw std::invalid_argument("m_sequence: seed must be nonzero and fit in `degree` bits");

    // Fibonacci LFSR: state bit i holds a_{t+i}; a_{t+degree} = XOR of state
    // bits selected by the low-order tap coefficients.
    const std::uint32_t feedback_taps = taps & mask;
    const std::uint32_t period = mask;
    std::vector<std::uint8_t> bits(period);
    std::uint32_t state = seed;
    for (std::uint32_t t = 0; t < period; ++t) {
        bits[t] = static_cast<std::uint8_t>(state & 1u);
#if defined(__GNUC__)
        const std::uint32_t fb = __builtin_parity(state & feedback_taps);
#else
        std::uint32_t fb = state & feedback_taps;
        fb ^= fb >> 16; fb ^= fb >> 8; fb ^= fb >> 4; fb ^= fb >> 2; fb ^= fb >> 1;
        fb &= 1u;
#endif
        state = (state >> 1) | (fb << (degree - 1));
        if (state == seed && t + 1 < period)
            throw std::runtime_error("m_sequence: polynomial is not primitive (period " +
                                     std::to_string(t + 1) + " < " + std::to_string(period) + ")");
    }
    if (state != seed)
        throw std::runtime_error("m_sequence: register did not return to the seed state");
    return bits;
}

ComplexVector gold_sequence(const GoldParams& params) {
    if (params.degree < 3 || params.degree > 10)
        throw std::invalid_argument("gold_sequence: degree must be in [3, 10]");
    const int n = (1 << params.degree) - 1;
    if (params.shift < 0 || params.shift >= n)
        throw std::invalid_argument("gold_sequence: shift must be in [0, 2^degree - 2]");

    const PolynomialPair pair = default_gold_pair(params.degree);
    const std::uint32_t taps_a = params.taps_a ? params.taps_a : pair.a;
    const std::uint32_t taps_b = params.taps_b ? params.taps_b : pair.b;
    const std::uint32_t ones = (1u << params.degree) - 1;
    const std::uint32_t seed_a = params.seed_a ? params.seed_a : ones;
    const std::uint32_t seed_b = params.seed_b ? params.seed_b : ones;

    const auto a = m_sequence(params.degree, taps_a, seed_a);
    const auto b = m_sequence(params.degree, taps_b, seed_b);

    ComplexVector chips(n);
    for (int i = 0; i < n; ++i) {
        const int bit = a[i] ^ b[(i + params.shift) % n];
        chips[i] = Complex(1.0 - 2.0 * bit, 0.0);
    }
    return chips;
}

bool validate_membership(const Eigen::Ref<const ComplexVector>& seq, double tol) {
    if (seq.size() < 1)
        return false;
    for (Eigen::Index i = 0; i < seq.size(); ++i) {
        if (std::abs(std::abs(seq[i]) - 1.0) > tol)
            return false;
    }
    return true;
}

}  // namespace weylcdma
