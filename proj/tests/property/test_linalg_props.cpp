#include "doctest.h"
#include "oracle.hpp"
#include "ybh/fixtures.hpp"
#include "ybh/cohomology.hpp"
#include "ybh/linalg.hpp"
#include "ybh/random.hpp"

using namespace ybh;

namespace {

ExactMatrix random_matrix(Rng& rng, const FieldSpec& k, std::size_t rows, std::size_t cols, double density) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<Scalar>> r(rows, std::vector<Scalar>(cols, Scalar::zero(k)));
    for (auto& row : r)
        for (auto& x : row)
            if (u(rng) < density) x = random_scalar(rng, k);
    return ExactMatrix::from_rows(k, r, cols);
}

// Rank-deficient by construction: product of a rows x r and r x cols matrix.
ExactMatrix low_rank(Rng& rng, const FieldSpec& k, std::size_t rows, std::size_t cols, std::size_t r) {
    return multiply(random_matrix(rng, k, rows, r, 0.8), random_matrix(rng, k, r, cols, 0.8));
}

}  // namespace

TEST_CASE("rank, kernel and solve identities") {
    Rng rng(7);
    for (const auto& k : {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(101)}) {
        CAPTURE(k.name());
        for (int t = 0; t < 60; ++t) {
            std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
            auto m = t % 2 ? random_matrix(rng, k, rows, cols, 0.4) : low_rank(rng, k, rows, cols, 1 + rng() % 3);
            auto r = rank(m);
            CHECK(r == test::dense_rank(m));
            if (!k.is_rational()) CHECK(r == test::dense_rank_mod_p(m));
            CHECK(r == rank(m.transpose()));

            auto ker = kernel_basis(m);
            CHECK(ker.size() + r == cols);
            for (const auto& v : ker)
                for (const auto& x : multiply(m, v)) CHECK(x.is_zero());

            auto red = rref(m);
            CHECK(red.rank == r);
            CHECK(rank(red.reduced) == r);

            Vector b(rows, Scalar::zero(k));
            for (auto& x : b) x = random_scalar(rng, k);
            auto s = solve_linear(m, b);
            if (s.solvable) {
                CHECK(multiply(m, s.solution) == b);
            } else {
                for (const auto& x : multiply(m.transpose(), s.certificate)) CHECK(x.is_zero());
                Scalar dot = Scalar::zero(k);
                for (std::size_t i = 0; i < rows; ++i) dot += s.certificate[i] * b[i];
                CHECK(dot.is_one());
            }
            // An image vector is always solvable.
            Vector x(cols, Scalar::zero(k));
            for (auto& e : x) e = random_scalar(rng, k);
            CHECK(solve_linear(m, multiply(m, x)).solvable);
        }
    }
}

TEST_CASE("rank of differential matrices agrees with the dense oracles") {
    for (const auto& k : {FieldSpec::prime(2), FieldSpec::prime(101)}) {
        for (const auto& [name, b] : test::fixtures_up_to(k, 3)) {
            CAPTURE(name);
            for (int deg : {1, 2}) {
                auto m = differential_matrix(b, deg);
                CHECK(rank(m) == test::dense_rank_mod_p(m));
            }
        }
    }
}
