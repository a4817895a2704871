#include "doctest.h"

#include "bornson/random_systems.hpp"
#include "bornson/solver.hpp"
#include "oracles.hpp"

using namespace bornson;

namespace {

const Amplitude t21{0.3, 0.1}, t31{-0.7, 0.2}, t42{1.5, -0.4}, t43{0.25, 0.9};

TransferOperator diamond(Amplitude a = t21, Amplitude b = t31, Amplitude c = t42,
                         Amplitude d = t43)
{
    const std::vector<Triplet> e{{1, 0, a}, {2, 0, b}, {3, 1, c}, {3, 2, d}};
    return SparseOperator::from_triplets(4, e);
}

TransferOperator cascade3(Amplitude a, Amplitude b)
{
    const std::vector<Triplet> e{{0, 1, a}, {1, 2, b}};
    return SparseOperator::from_triplets(3, e);
}

struct Scattering {
    DiagonalOperator h0;
    PotentialOperator v;
    Amplitude energy;
};

// Off-resonance random (H0, V, E) with an acyclic V.
Scattering random_scattering(std::size_t n, Rng& rng)
{
    std::uniform_real_distribution<double> level(-3.0, 3.0);
    std::vector<double> h(n);
    for (auto& x : h)
        x = level(rng);
    auto v = random_dag_operator({n, 0.4, 0.2, 2.0}, rng);
    const Amplitude e(level(rng), 0.3);
    return {DiagonalOperator(h), std::move(v), e};
}

} // namespace

TEST_SUITE("solver") {

TEST_CASE("make_system")
{
    CHECK(make_system(cascade3(0.5, 0.5)).depth() == 2);
    CHECK(make_system(diamond()).depth() == 2);
    CHECK(make_system(diamond()).term_count() == 3);
    CHECK(make_system(SparseOperator(3)).depth() == 0);

    const std::vector<Triplet> cyc{{1, 0, 0.5}, {0, 1, 0.5}};
    try {
        make_system(SparseOperator::from_triplets(2, cyc));
        FAIL("expected NotNilpotentError");
    } catch (const NotNilpotentError& e) {
        CHECK(e.cycle() == std::vector<std::size_t>{0, 1});
    }
}

TEST_CASE("finite Neumann inverse")
{
    CHECK(finite_neumann_inverse(make_system(SparseOperator(5))) ==
          DenseMatrix::Identity(5, 5));

    const auto ones = finite_neumann_inverse(make_system(diamond(1.0, 1.0, 1.0, 1.0)));
    CHECK(ones(3, 0) == Amplitude(2.0));
    CHECK(ones(1, 0) == Amplitude(1.0));
    CHECK(ones(0, 3) == Amplitude(0.0));

    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto op = random_dag_operator({10, 0.3, 0.0, 1.0}, rng);
        const DenseMatrix got = finite_neumann_inverse(make_system(op));
        CHECK(oracle::rel_diff(got, oracle::lu_inverse_identity_minus(op.to_dense())) <= 1e-10);
    }
}

TEST_CASE("solve_exact: cascade and diamond")
{
    const Amplitude a{0.5, -0.25}, b{1.5, 2.0};
    const auto c = solve_exact(make_system(cascade3(a, b)), StateVector::basis(3, 2));
    REQUIRE(c.terms.size() == 3);
    CHECK(c.total[2] == Amplitude(1.0));
    CHECK(c.total[1] == b);
    CHECK(oracle::close(c.total[0], a * b));

    const auto d = solve_exact(make_system(diamond()), StateVector::basis(4, 0));
    REQUIRE(d.terms.size() == 3);
    CHECK(d.total[0] == Amplitude(1.0));
    CHECK(d.total[1] == t21);
    CHECK(d.total[2] == t31);
    CHECK(oracle::close(d.total[3], t42 * t21 + t43 * t31));
    CHECK(oracle::close(d.terms[2][3], t42 * t21 + t43 * t31));

    const auto z = solve_exact(make_system(diamond()), StateVector(4));
    for (const auto& term : z.terms)
        CHECK(term.is_zero());
    CHECK(z.total.is_zero());

    CHECK_THROWS_AS(solve_exact(make_system(diamond()), StateVector(3)), DimensionError);
}

TEST_CASE("born_approximation")
{
    const auto op = diamond();
    const auto phi = StateVector::basis(4, 0);
    const auto first = born_approximation(op, phi, 1);
    CHECK(first[3] == Amplitude(0.0));
    CHECK(first[1] == t21);
    CHECK(first[2] == t31);
    CHECK(born_approximation(op, phi, 0) == phi);

    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const auto dag = random_dag_operator({9, 0.4, 0.1, 2.0}, rng);
        const auto sys = make_system(dag);
        const auto v = random_state(9, rng);
        const auto exact = solve_exact(sys, v).total;
        CHECK(oracle::rel_diff(born_approximation(dag, v, sys.depth()), exact) <= 1e-15);
        CHECK(born_approximation(dag, v, sys.depth() + 4) == exact);
    }
}

TEST_CASE("determinant of I - T")
{
    CHECK(std::abs(det_check(make_system(diamond(3.0, -7.0, 11.0, 0.5))) - 1.0) < 1e-14);
    CHECK(det_check(make_system(SparseOperator(4))) == Amplitude(1.0));

    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const auto op = random_dag_operator({50, 0.05, 0.0, 1e3}, rng);
        CHECK(std::abs(det_check(make_system(op)) - 1.0) <= 1e-6);
    }
}

TEST_CASE("full resolvent")
{
    const DiagonalOperator h0({0.0, 1.0, 2.5});
    const Amplitude e(0.4, 0.1);
    const auto g0 = free_resolvent(h0, e);
    const auto free = full_resolvent(make_system(build_transfer_operator(h0, SparseOperator(3), e)), g0);
    for (Eigen::Index j = 0; j < 3; ++j)
        for (Eigen::Index i = 0; i < 3; ++i)
            CHECK(free(j, i) == (i == j ? g0[std::size_t(i)] : Amplitude{}));

    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_scattering(8, rng);
        const auto sys = make_system(build_transfer_operator(s.h0, s.v, s.energy));
        const DenseMatrix g = full_resolvent(sys, free_resolvent(s.h0, s.energy));
        DenseMatrix h = -s.v.to_dense();
        for (Eigen::Index j = 0; j < 8; ++j)
            h(j, j) += s.energy - s.h0[std::size_t(j)];
        const DenseMatrix residual = g * h - DenseMatrix::Identity(8, 8);
        CHECK(residual.cwiseAbs().maxCoeff() <= 1e-9);
    }

    CHECK_THROWS_AS(full_resolvent(make_system(SparseOperator(3)), std::vector<Amplitude>(2)),
                    DimensionError);
}

TEST_CASE("T-matrix")
{
    CHECK(t_matrix(make_system(diamond()), SparseOperator(4)).isZero(0.0));

    // m = 0: the series stops at V.
    const std::vector<Triplet> ve{{1, 0, 2.0}};
    const auto v = SparseOperator::from_triplets(2, ve);
    CHECK(t_matrix(make_system(SparseOperator(2)), v) == v.to_dense());

    Rng rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_scattering(8, rng);
        const auto op = build_transfer_operator(s.h0, s.v, s.energy);
        const DenseMatrix got = t_matrix(make_system(op), s.v);
        const DenseMatrix want = s.v.to_dense() * oracle::lu_inverse_identity_minus(op.to_dense());
        CHECK(oracle::rel_diff(got, want) <= 1e-10);
        CHECK(got == s.v.to_dense() * finite_neumann_inverse(make_system(op)));
    }

    CHECK_THROWS_AS(t_matrix(make_system(diamond()), SparseOperator(3)), DimensionError);
}

TEST_CASE("direct solve oracle")
{
    const auto phi = StateVector::basis(4, 0);
    CHECK(oracle::rel_diff(direct_solve_oracle(diamond(), phi),
                           solve_exact(make_system(diamond()), phi).total) <= 1e-12);

    Rng rng(53);
    const auto v = random_state(6, rng);
    CHECK(direct_solve_oracle(SparseOperator(6), v) == v);

    for (int trial = 0; trial < 20; ++trial) {
        const auto op = random_cyclic_operator(6, 0.5, 0.5, rng);
        const auto w = random_state(6, rng);
        CHECK(oracle::rel_diff(direct_solve_oracle(op, w), born_approximation(op, w, 60)) <= 1e-12);
    }

    CHECK_THROWS_AS(direct_solve_oracle(SparseOperator::identity(3), StateVector(3)),
                    SingularError);
}

TEST_CASE("property: exact collapse without any smallness condition")
{
    Rng rng(59);
    std::uniform_int_distribution<std::size_t> dims(2, 30);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = dims(rng);
        const auto op = random_dag_operator({n, 3.0 / double(n), 0.0, 5.0}, rng);
        const auto v = random_state(n, rng);
        const auto exact = solve_exact(make_system(op), v).total;
        CHECK(oracle::rel_diff(exact, direct_solve_oracle(op, v)) <= 1e-9);
    }
}

TEST_CASE("property: collapse is scale invariant")
{
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const auto base = random_dag_operator({8, 0.3, 0.2, 1.0}, rng);
        std::vector<Triplet> scaled = base.triplets();
        for (auto& t : scaled)
            t.value *= 1e6;
        const auto op = SparseOperator::from_triplets(8, scaled);
        const DenseMatrix inverse = finite_neumann_inverse(make_system(op));
        CHECK(oracle::inverse_residual(oracle::identity_minus(op.to_dense()), inverse) <= 1e-6);
    }
}

TEST_CASE("property: telescoping and zero remainder")
{
    Rng rng(67);
    for (int trial = 0; trial < 50; ++trial) {
        const auto op = random_dag_operator({10, 0.3, 0.0, 2.0}, rng);
        const auto sys = make_system(op);
        const DenseMatrix product =
            oracle::identity_minus(op.to_dense()) * finite_neumann_inverse(sys);
        CHECK((product - DenseMatrix::Identity(10, 10)).cwiseAbs().maxCoeff() <= 1e-10);

        const auto expansion = solve_exact(sys, random_state(10, rng));
        CHECK(expansion.terms.size() == sys.depth() + 1);
        CHECK(matvec(op, expansion.terms.back()).is_zero());
    }
}

} // TEST_SUITE
