#include <doctest.h>

#include <random>

#include "tc/tensor_square.hpp"

using namespace tc;

namespace {

using QEl = AlgebraElement<Rationals>;
using QTensor = TensorElement<Rationals>;

std::shared_ptr<const ArnoldAlgebra> algebra(int n, int m)
{
    return std::make_shared<const ArnoldAlgebra>(build_presentation(n, m));
}

QEl gen(const std::shared_ptr<const ArnoldAlgebra>& alg, int i, int j)
{
    return QEl::generator(alg, Rationals{}, {i, j});
}

QEl one(const std::shared_ptr<const ArnoldAlgebra>& alg)
{
    return QEl::unit(alg, Rationals{});
}

} // namespace

TEST_CASE("Koszul sign on decomposables")
{
    for (int m : {2, 3, 4, 5}) {
        CAPTURE(m);
        auto alg = algebra(2, m);
        const QEl e = gen(alg, 1, 2);
        const QTensor ee = QTensor::cross(e, e);
        const QTensor product = QTensor::cross(one(alg), e) * QTensor::cross(e, one(alg));
        if ((m - 1) % 2 == 1)
            CHECK(product == ee.scaled(-1));
        else
            CHECK(product == ee);
    }
}

TEST_CASE("bar(e)^2 parity dichotomy")
{
    for (int m : {2, 3, 4, 5, 6}) {
        CAPTURE(m);
        auto alg = algebra(2, m);
        const QEl e = gen(alg, 1, 2);
        const QTensor b = bar(e);
        CHECK(b == QTensor::cross(e, one(alg)) - QTensor::cross(one(alg), e));
        const QTensor sq = b * b;
        if ((m - 1) % 2 == 0)
            CHECK(sq == QTensor::cross(e, e).scaled(-2));
        else
            CHECK(sq.is_zero());
    }
    // Over Z_2 the even-degree square dies as well.
    auto alg = algebra(2, 3);
    const auto e2 = AlgebraElement<PrimeField>::generator(alg, PrimeField(2), {1, 2});
    CHECK((bar(e2) * bar(e2)).is_zero());
}

TEST_CASE("bar classes")
{
    auto alg = algebra(3, 2);
    CHECK(bar(QEl(alg, Rationals{})).is_zero());
    const QEl mixed = one(alg) + gen(alg, 1, 2);
    CHECK_THROWS_AS(bar(mixed), std::invalid_argument);
    const QEl v = gen(alg, 1, 2) + gen(alg, 2, 3).scaled(3);
    const QEl w = gen(alg, 1, 3);
    CHECK(bar(v + w) == bar(v) + bar(w));
    CHECK(diagonal_restriction(bar(v)).is_zero());
    CHECK(diagonal_restriction(bar(gen(alg, 1, 2) * gen(alg, 1, 3))).is_zero());
}

TEST_CASE("diagonal restriction")
{
    auto alg2 = algebra(2, 3);
    const QEl e = gen(alg2, 1, 2);
    CHECK(diagonal_restriction(QTensor::cross(e, e)).is_zero());

    auto alg = algebra(3, 2);
    const QTensor x = QTensor::cross(gen(alg, 1, 2), gen(alg, 1, 3));
    CHECK(diagonal_restriction(x) == gen(alg, 1, 2) * gen(alg, 1, 3));
    CHECK(diagonal_restriction(x) == (gen(alg, 1, 2) - gen(alg, 1, 3)) * gen(alg, 2, 3));
    CHECK(diagonal_restriction(QTensor::cross(one(alg), one(alg))) == one(alg));
}

TEST_CASE("diagonal restriction is multiplicative and swap is an algebra map")
{
    std::mt19937_64 rng(19);
    for (int m : {2, 3}) {
        auto alg = algebra(3, m);
        const auto gens = alg->presentation().generators();
        std::uniform_int_distribution<std::size_t> pick(0, alg->size() - 1);
        std::uniform_int_distribution<int> coeff(-2, 2);
        auto random_tensor = [&] {
            QTensor t(alg, Rationals{});
            for (int k = 0; k < 3; ++k)
                t.add_term({pick(rng), pick(rng)}, coeff(rng));
            return t;
        };
        for (int trial = 0; trial < 200; ++trial) {
            const QTensor x = random_tensor(), y = random_tensor();
            CHECK(diagonal_restriction(x * y) == diagonal_restriction(x) * diagonal_restriction(y));
            CHECK(koszul_swap(x * y) == koszul_swap(x) * koszul_swap(y));
            CHECK(koszul_swap(koszul_swap(x)) == x);
        }
    }
}

TEST_CASE("tensor coordinates")
{
    auto alg = algebra(3, 2);
    const TensorSquare<Rationals> sq(alg, Rationals{});
    CHECK(sq.max_total() == 4);
    // ranks 1,3,2: piece t = sum r_a r_{t-a}
    CHECK(sq.piece_dim(0) == 1);
    CHECK(sq.piece_dim(1) == 6);
    CHECK(sq.piece_dim(2) == 13);
    CHECK(sq.piece_dim(3) == 12);
    CHECK(sq.piece_dim(4) == 4);
    CHECK(sq.piece_dim(5) == 0);

    const QTensor x = bar(gen(alg, 1, 2));
    const QTensor y = bar(gen(alg, 2, 3)) * bar(gen(alg, 1, 3));
    const auto vx = sq.to_vector(x, 1);
    const auto vy = sq.to_vector(y, 2);
    CHECK(sq.from_vector(1, vx) == x);
    CHECK(sq.from_vector(3, sq.multiply(1, vx, 2, vy)) == x * y);
    CHECK(sq.multiply(2, vy, 3, sq.zero_vector(3)).empty());
    CHECK_THROWS_AS(sq.to_vector(x, 2), std::invalid_argument);
}

TEST_CASE("mismatched tensor presentations are rejected")
{
    const QTensor a = bar(gen(algebra(3, 2), 1, 2));
    const QTensor b = bar(gen(algebra(3, 4), 1, 2));
    CHECK_THROWS_AS(tensor_multiply(a, b), std::invalid_argument);
}
