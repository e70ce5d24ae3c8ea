#include "weylcdma/spectral.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "weylcdma/sequences.hpp"

namespace weylcdma {

EigenSystem::EigenSystem(BitCase kind, int dim) : kind_(kind), dim_(dim) {
    if (dim < 1)
        throw std::invalid_argument("EigenSystem: dim must be >= 1");
    const double sigma = kind == BitCase::same_bits ? 0.0 : 1.0 / (2.0 * dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    basis_.resize(dim, dim);
    for (int m = 1; m <= dim; ++m)
        basis_.col(m - 1) = scale * weyl_sequence({m, dim, sigma});
}

Complex EigenSystem::eigenvalue(int m, int gap) const {
    if (m < 1 || m > dim_)
        throw std::invalid_argument("eigenvalue: m must be in [1, N]");
    if (gap < 0 || gap > dim_)
        throw std::invalid_argument("eigenvalue: gap must be in [0, N]");
    const std::int64_t n = dim_;
    if (kind_ == BitCase::same_bits) {
        // exp(-2 pi j (m*gap mod N) / N)
        const std::int64_t r = (static_cast<std::int64_t>(m) * gap) % n;
        return std::polar(1.0, -kTwoPi * static_cast<double>(r) / static_cast<double>(n));
    }
    // exp(-2 pi j (gap*(2m+1) mod 2N) / (2N))
    const std::int64_t r = (static_cast<std::int64_t>(gap) * (2 * m + 1)) % (2 * n);
    return std::polar(1.0, -kTwoPi * static_cast<double>(r) / static_cast<double>(2 * n));
}

ComplexVector EigenSystem::eigenvalues(int gap) const {
    ComplexVector lam(dim_);
    for (int m = 1; m <= dim_; ++m)
        lam[m - 1] = eigenvalue(m, gap);
    return lam;
}

const EigenSystem& eigensystem(BitCase kind, int dim) {
    if (dim < 1)
        throw std::invalid_argument("eigensystem: dim must be >= 1");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<const EigenSystem>> cache;
    const auto key = std::make_pair(static_cast<int>(kind), dim);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<const EigenSystem>(kind, dim)).first;
    return *it->second;
}

double verify_diagonalization(BitCase kind, int dim, int gap) {
    if (dim > 512)
        throw std::invalid_argument("verify_diagonalization: dim > 512 refused");
    if (gap < 1 || gap > dim)
        throw std::invalid_argument("verify_diagonalization: gap must be in [1, N]");
    const EigenSystem& es = eigensystem(kind, dim);
    const ComplexMatrix dense = materialize(ShiftOperator(gap, es.canonical_bits(), dim));
    const ComplexMatrix rebuilt =
        es.basis() * es.eigenvalues(gap).asDiagonal() * es.basis().adjoint();
    return (dense - rebuilt).norm();
}

bool eigen_relation_check(BitCase kind, int dim, int m, int gap) {
    if (m < 1 || m > dim || gap < 1 || gap > dim)
        throw std::invalid_argument("eigen_relation_check: m and gap must be in [1, N]");
    const EigenSystem& es = eigensystem(kind, dim);
    const ComplexVector column = es.basis().col(m - 1);
    const ComplexVector shifted = weylcdma::apply(ShiftOperator(gap, es.canonical_bits(), dim), column);
    const Complex lam = es.eigenvalue(m, gap);
    if ((shifted - lam * column).lpNorm<Eigen::Infinity>() > 1e-10)
        return false;
    return std::abs(lam - std::pow(es.eigenvalue(m, 1), gap)) <= 1e-10;
}

}  // namespace weylcdma
