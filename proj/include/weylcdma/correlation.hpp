#pragma once

#include "weylcdma/types.hpp"

namespace weylcdma {

/// Signed cyclic shift with gap length `gap` acting on C^dim:
/// the block matrix [[0, prev*E_gap], [cur*E_{dim-gap}, 0]].
/// Stored as (gap, bits, dim) only; applying it is O(dim).
/// gap = 0 degenerates to cur * identity (the wrapped block is empty).
struct ShiftOperator {
    int gap = 0;
    BitPair bits{};
    int dim = 1;

    ShiftOperator() = default;
    ShiftOperator(int gap_length, BitPair bit_pair, int dimension)
        : gap(gap_length), bits(bit_pair), dim(dimension) {
        if (dim < 1)
            throw std::invalid_argument("ShiftOperator: dim must be >= 1");
        if (gap < 0 || gap > dim)
            throw std::invalid_argument("ShiftOperator: gap must be in [0, dim]");
    }
};

namespace detail {

inline void check_pair(Eigen::Index n1, Eigen::Index n2, int gap) {
    if (n1 != n2)
        throw std::invalid_argument("correlation: sequences must have equal length");
    if (n1 < 1)
        throw std::invalid_argument("correlation: sequences must be nonempty");
    if (gap < 0 || gap > n1)
        throw std::invalid_argument("correlation: shift must be in [0, N]");
}

}  // namespace detail

/// Normalized cross-correlation at integer shift `gap`:
///   (1/N) { sum_{n=1}^{N-gap} conj(s1_{n+gap}) s2_n
///           + wrap_sign * sum_{n=1}^{gap} conj(s1_n) s2_{N-gap+n} }.
/// wrap_sign = +1 gives the periodic, -1 the aperiodic correlation.
template <typename D1, typename D2>
Complex cross_correlation(const Eigen::MatrixBase<D1>& seq1,
                          const Eigen::MatrixBase<D2>& seq2,
                          int gap, int wrap_sign) {
    detail::check_pair(seq1.size(), seq2.size(), gap);
    if (wrap_sign != 1 && wrap_sign != -1)
        throw std::invalid_argument("cross_correlation: wrap_sign must be +1 or -1");
    const Eigen::Index n = seq1.size();
    const Complex body = seq1.segment(gap, n - gap).dot(seq2.head(n - gap));
    const Complex wrap = seq1.head(gap).dot(seq2.segment(n - gap, gap));
    return (body + static_cast<double>(wrap_sign) * wrap) / static_cast<double>(n);
}

/// Despreading correlation between the observed sequence s_i and an
/// interferer s_k offset by `gap` chips whose window straddles the bit pair:
///   W = Tc exp(j phase) { prev * sum_{n=1}^{gap} conj(s_{i,n}) s_{k,N-gap+n}
///                         + cur * sum_{n=1}^{N-gap} conj(s_{i,gap+n}) s_{k,n} }.
/// Unnormalized (no 1/N).
template <typename D1, typename D2>
Complex despread_correlation_direct(const Eigen::MatrixBase<D1>& seq_i,
                                    const Eigen::MatrixBase<D2>& seq_k,
                                    int gap, BitPair bits,
                                    const DespreadContext& ctx = {}) {
    detail::check_pair(seq_i.size(), seq_k.size(), gap);
    const Eigen::Index n = seq_i.size();
    const Complex wrap = seq_i.head(gap).dot(seq_k.segment(n - gap, gap));
    const Complex body = seq_i.segment(gap, n - gap).dot(seq_k.head(n - gap));
    const Complex carrier = ctx.chip_width * std::polar(1.0, ctx.phase);
    return carrier * (static_cast<double>(bits.prev) * wrap +
                      static_cast<double>(bits.cur) * body);
}

/// Applies the shift operator as a signed permutation, never forming a matrix.
template <typename D>
ComplexVector apply(const ShiftOperator& op, const Eigen::MatrixBase<D>& x) {
    if (x.size() != op.dim)
        throw std::invalid_argument("apply: operator dimension does not match vector");
    const int n = op.dim;
    const int gap = op.gap;
    ComplexVector y(n);
    y.head(gap) = static_cast<double>(op.bits.prev) * x.segment(n - gap, gap);
    y.segment(gap, n - gap) = static_cast<double>(op.bits.cur) * x.head(n - gap);
    return y;
}

/// Same correlation as despread_correlation_direct, evaluated as the
/// quadratic form Tc exp(j phase) * s_i^* B s_k through the signed
/// permutation.
template <typename D1, typename D2>
Complex despread_correlation_quadratic(const Eigen::MatrixBase<D1>& seq_i,
                                       const Eigen::MatrixBase<D2>& seq_k,
                                       const ShiftOperator& op,
                                       const DespreadContext& ctx = {}) {
    if (seq_i.size() != op.dim || seq_k.size() != op.dim)
        throw std::invalid_argument("despread_correlation_quadratic: dimension mismatch");
    const ComplexVector shifted = apply(op, seq_k);
    const Complex carrier = ctx.chip_width * std::polar(1.0, ctx.phase);
    return carrier * seq_i.dot(shifted);
}

/// Dense form of the operator, for verification only. Every row and column
/// holds exactly one entry of value +-1. Guarded to dim <= 4096.
ComplexMatrix materialize(const ShiftOperator& op);

/// True iff the materialized gap-`gap` operator equals the gap-1 operator
/// raised to the `gap`-th power, entry for entry (exact). Holds for the
/// canonical bit pairs (+1,+1) and (-1,+1).
bool compose_check(int gap, BitPair bits, int dim);

}  // namespace weylcdma
