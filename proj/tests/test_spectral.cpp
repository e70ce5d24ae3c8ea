#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "weylcdma/spectral.hpp"

using namespace weylcdma;

TEST_CASE("closed-form eigenvalues at hand-checked points") {
    const EigenSystem& same4 = eigensystem(BitCase::same_bits, 4);
    // exp(-2 pi j * 1/4) = -j
    CHECK(std::abs(same4.eigenvalue(1, 1) - Complex(0, -1)) < 1e-15);
    // m=4 is the all-ones vector: fixed by every cyclic shift
    CHECK(std::abs(same4.eigenvalue(4, 3) - Complex(1, 0)) < 1e-15);

    // one-dimensional negacyclic shift is plain negation
    const EigenSystem& diff1 = eigensystem(BitCase::different_bits, 1);
    CHECK(std::abs(diff1.eigenvalue(1, 1) - Complex(-1, 0)) < 1e-15);
}

TEST_CASE("eigenvalues stay exactly on the unit circle") {
    for (BitCase kind : {BitCase::same_bits, BitCase::different_bits}) {
        const EigenSystem& es = eigensystem(kind, 129);
        for (int m : {1, 2, 64, 129})
            for (int gap : {0, 1, 7, 129})
                CHECK(std::abs(std::abs(es.eigenvalue(m, gap)) - 1.0) < 1e-15);
    }
}

TEST_CASE("gap-0 eigenvalues are all one") {
    const EigenSystem& es = eigensystem(BitCase::different_bits, 9);
    const ComplexVector lam = es.eigenvalues(0);
    for (int m = 0; m < 9; ++m) CHECK(std::abs(lam[m] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("basis is unitary") {
    for (BitCase kind : {BitCase::same_bits, BitCase::different_bits}) {
        for (int n : {1, 2, 8, 33}) {
            const EigenSystem& es = eigensystem(kind, n);
            const ComplexMatrix gram = es.basis().adjoint() * es.basis();
            CHECK((gram - ComplexMatrix::Identity(n, n)).norm() < 1e-12 * n);
        }
    }
}

TEST_CASE("basis columns are normalized weyl sequences") {
    const EigenSystem& es = eigensystem(BitCase::same_bits, 5);
    for (int m = 1; m <= 5; ++m) CHECK(std::abs(es.basis().col(m - 1).norm() - 1.0) < 1e-13);
    // column of the all-ones eigenvector
    CHECK(std::abs(es.basis()(3, 4) - Complex(1.0 / std::sqrt(5.0), 0)) < 1e-13);
}

TEST_CASE("dense reconstruction residual is tiny for both kinds") {
    for (BitCase kind : {BitCase::same_bits, BitCase::different_bits})
        for (int gap = 1; gap <= 8; ++gap)
            CHECK(verify_diagonalization(kind, 8, gap) < 1e-9 * 8);
}

TEST_CASE("eigen relation holds on the signed-permutation path") {
    for (BitCase kind : {BitCase::same_bits, BitCase::different_bits})
        for (int m : {1, 5, 16})
            for (int gap : {1, 3, 16})
                CHECK(eigen_relation_check(kind, 16, m, gap));
}

TEST_CASE("eigenvalues follow the power law in the gap") {
    for (BitCase kind : {BitCase::same_bits, BitCase::different_bits}) {
        const EigenSystem& es = eigensystem(kind, 12);
        for (int m = 1; m <= 12; ++m)
            for (int gap : {2, 5, 11})
                CHECK(std::abs(es.eigenvalue(m, gap) - std::pow(es.eigenvalue(m, 1), gap)) <
                      1e-10);
    }
}

TEST_CASE("coprime gaps give N distinct eigenvalues") {
    const EigenSystem& es = eigensystem(BitCase::same_bits, 8);
    const ComplexVector lam = es.eigenvalues(3);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) CHECK(std::abs(lam[i] - lam[j]) > 1e-9);
}

TEST_CASE("same-bit and different-bit spectra never overlap") {
    const ComplexVector same = eigensystem(BitCase::same_bits, 16).eigenvalues(1);
    const ComplexVector diff = eigensystem(BitCase::different_bits, 16).eigenvalues(1);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) CHECK(std::abs(same[i] - diff[j]) > 1e-6);
}

TEST_CASE("eigensystem cache hands out one shared instance") {
    const EigenSystem* a = &eigensystem(BitCase::same_bits, 24);
    const EigenSystem* b = &eigensystem(BitCase::same_bits, 24);
    const EigenSystem* c = &eigensystem(BitCase::different_bits, 24);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("canonical bit pairs select the cyclic and negacyclic cases") {
    CHECK(eigensystem(BitCase::same_bits, 4).canonical_bits().same());
    CHECK_FALSE(eigensystem(BitCase::different_bits, 4).canonical_bits().same());
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(eigensystem(BitCase::same_bits, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_diagonalization(BitCase::same_bits, 513, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_diagonalization(BitCase::same_bits, 8, 0), std::invalid_argument);
    CHECK_THROWS_AS(eigensystem(BitCase::same_bits, 4).eigenvalue(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(eigensystem(BitCase::same_bits, 4).eigenvalue(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(eigensystem(BitCase::same_bits, 4).eigenvalue(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(eigen_relation_check(BitCase::same_bits, 4, 1, 0), std::invalid_argument);
}
