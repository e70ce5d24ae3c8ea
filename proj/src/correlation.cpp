#include "weylcdma/correlation.hpp"

namespace weylcdma {

ComplexMatrix materialize(const ShiftOperator& op) {
    if (op.dim > 4096)
        throw std::invalid_argument("materialize: dim > 4096 refused, use apply()");
    const int n = op.dim;
    const int gap = op.gap;
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < gap; ++i)
        m(i, n - gap + i) = static_cast<double>(op.bits.prev);
    for (int i = 0; i < n - gap; ++i)
        m(gap + i, i) = static_cast<double>(op.bits.cur);
    return m;
}

bool compose_check(int gap, BitPair bits, int dim) {
    if (gap < 1 || gap > dim)
        throw std::invalid_argument("compose_check: gap must be in [1, dim]");
    const ComplexMatrix step = materialize(ShiftOperator(1, bits, dim));
    ComplexMatrix power = ComplexMatrix::Identity(dim, dim);
    for (int i = 0; i < gap; ++i)
        power = step * power;
    // entries stay in {0, +1, -1}, so the product is exact
    return power == materialize(ShiftOperator(gap, bits, dim));
}

}  // namespace weylcdma
