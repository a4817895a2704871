#include "doctest.h"

#include "bornson/algebra.hpp"
#include "bornson/random_systems.hpp"
#include "oracles.hpp"

using namespace bornson;

namespace {

const Amplitude t21{0.3, 0.1}, t31{-0.7, 0.2}, t42{1.5, -0.4}, t43{0.25, 0.9};

SparseOperator diamond()
{
    const std::vector<Triplet> e{{1, 0, t21}, {2, 0, t31}, {3, 1, t42}, {3, 2, t43}};
    return SparseOperator::from_triplets(4, e);
}

} // namespace

TEST_SUITE("algebra") {

TEST_CASE("matvec on the diamond sends |1> to t21|2> + t31|3>")
{
    const auto out = matvec(diamond(), StateVector::basis(4, 0));
    CHECK(out[0] == Amplitude{});
    CHECK(out[1] == t21);
    CHECK(out[2] == t31);
    CHECK(out[3] == Amplitude{});
}

TEST_CASE("matvec of the zero operator is zero")
{
    Rng rng(1);
    CHECK(matvec(SparseOperator(6), random_state(6, rng)).is_zero());
}

TEST_CASE("matvec agrees with dense multiplication")
{
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const DenseMatrix m = oracle::random_dense(5, 0.4, rng);
        const auto v = random_state(5, rng);
        const auto got = matvec(SparseOperator::from_dense(m), v);
        const Eigen::VectorXcd want = m * oracle::to_eigen(v);
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(std::abs(got[j] - want(Eigen::Index(j))) <= 1e-15 * (1 + std::abs(want(Eigen::Index(j)))));
    }
}

TEST_CASE("matvec rejects mismatched dimensions")
{
    CHECK_THROWS_AS(matvec(SparseOperator(3), StateVector(4)), DimensionError);
    CHECK_THROWS_AS(matmul(SparseOperator(3), SparseOperator(4)), DimensionError);
}

TEST_CASE("cascade squared has the single entry t21 t32 at (1,3)")
{
    const Amplitude a{0.4, 0.0}, b{0.0, 2.0};
    const std::vector<Triplet> e{{0, 1, a}, {1, 2, b}};
    const auto sq = matmul(SparseOperator::from_triplets(3, e), SparseOperator::from_triplets(3, e));
    REQUIRE(sq.nnz() == 1);
    CHECK(oracle::close(sq.at(0, 2), a * b));
}

TEST_CASE("diamond squared has the single entry t42 t21 + t43 t31 at (4,1)")
{
    const auto sq = matmul(diamond(), diamond());
    REQUIRE(sq.nnz() == 1);
    CHECK(oracle::close(sq.at(3, 0), t42 * t21 + t43 * t31));
}

TEST_CASE("product with the zero operator is zero")
{
    CHECK(matmul(diamond(), SparseOperator(4)).is_zero());
    CHECK(matmul(SparseOperator(4), diamond()).is_zero());
}

TEST_CASE("cancelling products are dropped below the zero threshold")
{
    // 1 -> 2 -> 4 and 1 -> 3 -> 4 with opposite signs.
    const std::vector<Triplet> e{{1, 0, 1.0}, {2, 0, 1.0}, {3, 1, 1.0}, {3, 2, -1.0}};
    const auto t = SparseOperator::from_triplets(4, e);
    CHECK(matmul(t, t).is_zero());
}

TEST_CASE("power")
{
    CHECK(power(diamond(), 3).is_zero());
    CHECK(power(diamond(), 0) == SparseOperator::identity(4));
    CHECK(power(diamond(), 1) == diamond());

    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const auto t = random_dag_operator({8, 0.4, 0.5, 1.5}, rng);
        const DenseMatrix want = oracle::dense_power(t.to_dense(), 2);
        CHECK(oracle::rel_diff(power(t, 2).to_dense(), want) <= 1e-14);
    }
}

TEST_CASE("operator norms")
{
    for (auto kind : {NormKind::Inf, NormKind::One, NormKind::Frobenius})
        CHECK(operator_norm(SparseOperator(3), kind) == 0.0);

    const auto id = SparseOperator::identity(4);
    CHECK(operator_norm(id, NormKind::Inf) == 1.0);
    CHECK(operator_norm(id, NormKind::One) == 1.0);
    CHECK(operator_norm(id, NormKind::Frobenius) == doctest::Approx(2.0).epsilon(1e-15));

    const std::vector<Triplet> one{{2, 1, Amplitude(0.3, 0.4)}};
    const auto single = SparseOperator::from_triplets(3, one);
    for (auto kind : {NormKind::Inf, NormKind::One, NormKind::Frobenius})
        CHECK(operator_norm(single, kind) == doctest::Approx(0.5).epsilon(1e-15));

    // rows {1,2} vs columns: inf picks the row sum, one the column sum
    const std::vector<Triplet> e{{0, 0, 1.0}, {0, 1, 2.0}, {1, 0, 4.0}};
    const auto m = SparseOperator::from_triplets(2, e);
    CHECK(operator_norm(m, NormKind::Inf) == 4.0);
    CHECK(operator_norm(m, NormKind::One) == 5.0);
}

TEST_CASE("transfer operator from H0, V and E")
{
    const DiagonalOperator h0({0.0, 1.0});
    const std::vector<Triplet> v21{{1, 0, 1.0}};
    const auto v = SparseOperator::from_triplets(2, v21);

    const auto t = build_transfer_operator(h0, v, 3.0);
    CHECK(t.nnz() == 1);
    CHECK(t.at(1, 0) == Amplitude(0.5));

    CHECK(build_transfer_operator(h0, SparseOperator(2), 3.0).is_zero());

    try {
        build_transfer_operator(h0, v, 1.0);
        FAIL("expected ResonanceError");
    } catch (const ResonanceError& e) {
        CHECK(e.level() == 1);
    }

    // A small imaginary part moves the energy off the real axis.
    const auto shifted = build_transfer_operator(h0, v, Amplitude(1.0, 1e-3));
    CHECK(std::abs(shifted.at(1, 0) - 1.0 / Amplitude(0.0, 1e-3)) < 1e-9);

    CHECK_THROWS_AS(build_transfer_operator(DiagonalOperator({0.0, 1.0, 2.0}), v, 3.0),
                    DimensionError);
}

TEST_CASE("construction rejects duplicates and out-of-range entries")
{
    const std::vector<Triplet> dup{{0, 1, 1.0}, {0, 1, 2.0}};
    CHECK_THROWS_AS(SparseOperator::from_triplets(2, dup), ArgumentError);
    const std::vector<Triplet> out{{2, 0, 1.0}};
    CHECK_THROWS_AS(SparseOperator::from_triplets(2, out), ArgumentError);
    CHECK_THROWS_AS(SparseOperator(0), ArgumentError);
    CHECK_THROWS_AS(StateVector(std::vector<Amplitude>{Amplitude(NAN, 0)}), ArgumentError);
    const std::vector<Triplet> tiny{{0, 1, 1e-15}};
    CHECK(SparseOperator::from_triplets(2, tiny).is_zero());
}

TEST_CASE("property: dense round trip")
{
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        DenseMatrix m = oracle::random_dense(6, 0.5, rng);
        CHECK(SparseOperator::from_dense(m).to_dense() == m);
    }
}

TEST_CASE("property: matmul is associative")
{
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = SparseOperator::from_dense(oracle::random_dense(6, 0.4, rng));
        const auto b = SparseOperator::from_dense(oracle::random_dense(6, 0.4, rng));
        const auto c = SparseOperator::from_dense(oracle::random_dense(6, 0.4, rng));
        const DenseMatrix want = a.to_dense() * b.to_dense() * c.to_dense();
        const DenseMatrix left = matmul(matmul(a, b), c).to_dense();
        const DenseMatrix right = matmul(a, matmul(b, c)).to_dense();
        for (Eigen::Index j = 0; j < 6; ++j)
            for (Eigen::Index i = 0; i < 6; ++i) {
                const double scale = std::max(1.0, std::abs(want(j, i)));
                CHECK(std::abs(left(j, i) - want(j, i)) <= 1e-12 * scale);
                CHECK(std::abs(right(j, i) - want(j, i)) <= 1e-12 * scale);
            }
    }
}

TEST_CASE("property: induced norms and Frobenius are submultiplicative")
{
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = SparseOperator::from_dense(oracle::random_dense(7, 0.5, rng));
        const auto b = SparseOperator::from_dense(oracle::random_dense(7, 0.5, rng));
        const auto ab = matmul(a, b);
        for (auto kind : {NormKind::Inf, NormKind::One, NormKind::Frobenius})
            CHECK(operator_norm(ab, kind) <=
                  operator_norm(a, kind) * operator_norm(b, kind) + 1e-12);
    }
}

TEST_CASE("property: transfer operator keeps the sparsity pattern of V")
{
    Rng rng(13);
    std::uniform_real_distribution<double> level(-5.0, 5.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto v = SparseOperator::from_dense(oracle::random_dense(8, 0.3, rng));
        std::vector<double> h(8);
        for (auto& x : h)
            x = level(rng);
        const auto t = build_transfer_operator(DiagonalOperator(h), v, Amplitude(0.37, 0.2));
        REQUIRE(t.nnz() == v.nnz());
        const auto tv = t.triplets();
        const auto vv = v.triplets();
        for (std::size_t k = 0; k < tv.size(); ++k) {
            CHECK(tv[k].row == vv[k].row);
            CHECK(tv[k].col == vv[k].col);
        }
    }
}

} // TEST_SUITE
