#include <doctest.h>

#include <random>

#include "tc/algebra_element.hpp"
#include "tc/arnold_algebra.hpp"
#include "tc/element_parser.hpp"

using namespace tc;

namespace {

IntegralCombination combo(std::initializer_list<std::pair<Word, int>> terms)
{
    IntegralCombination out;
    for (const auto& [w, c] : terms)
        out[Monomial{w}] = c;
    return out;
}

using IntEl = AlgebraElement<Integers>;

std::shared_ptr<const ArnoldAlgebra> algebra(int n, int m)
{
    return std::make_shared<const ArnoldAlgebra>(build_presentation(n, m));
}

IntEl gen(const std::shared_ptr<const ArnoldAlgebra>& alg, int i, int j)
{
    return IntEl::generator(alg, Integers{}, {i, j});
}

} // namespace

TEST_CASE("build_presentation")
{
    const auto s2 = build_presentation(2, 3);
    CHECK(s2.generators() == std::vector<Edge>{{1, 2}});
    CHECK(s2.generator_degree() == 2);
    CHECK(s2.parity() == 0);

    const auto planar = build_presentation(3, 2);
    CHECK(planar.generators() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(planar.generator_degree() == 1);
    CHECK(planar.parity() == 1);

    const auto point = build_presentation(1, 4);
    CHECK(point.generators().empty());
    const ArnoldAlgebra ground(point);
    CHECK(ground.size() == 1);
    CHECK(ground.monomial(0).to_string() == "1");

    CHECK_THROWS_AS(build_presentation(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_presentation(0, 3), std::invalid_argument);
    CHECK(build_presentation(5, 2).generators().size() == 10);
}

TEST_CASE("straighten on the three-point relations")
{
    for (int parity : {0, 1}) {
        CAPTURE(parity);
        // e12 e13 is admissible and equals (e12 - e13) e23 in normal form.
        CHECK(straighten({{1, 2}, {1, 3}}, parity) == combo({{{{1, 2}, {1, 3}}, 1}}));
        // e13 e23 = e12 e23 - e12 e13
        CHECK(straighten({{1, 3}, {2, 3}}, parity) == combo({{{{1, 2}, {2, 3}}, 1}, {{{1, 2}, {1, 3}}, -1}}));
        CHECK(straighten({{1, 2}, {1, 2}}, parity).empty());
        CHECK(straighten({{1, 2}, {2, 3}, {1, 2}}, parity).empty());
    }
    // Swapping distinct generators: sign only for odd degree.
    CHECK(straighten({{1, 3}, {1, 2}}, 0) == combo({{{{1, 2}, {1, 3}}, 1}}));
    CHECK(straighten({{1, 3}, {1, 2}}, 1) == combo({{{{1, 2}, {1, 3}}, -1}}));
    CHECK(straighten({}, 1) == combo({{{}, 1}}));

    CHECK_THROWS_AS(straighten({{2, 1}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(straighten({{2, 2}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(straighten({{0, 3}}, 1), std::invalid_argument);
}

TEST_CASE("relation holds in the algebra for both parities")
{
    for (int m : {2, 3}) {
        auto alg = algebra(3, m);
        // e_ij e_ik = (e_ij - e_ik) e_jk
        CHECK(gen(alg, 1, 2) * gen(alg, 1, 3) == (gen(alg, 1, 2) - gen(alg, 1, 3)) * gen(alg, 2, 3));
        CHECK((gen(alg, 1, 2) * gen(alg, 1, 2)).is_zero());
    }
}

TEST_CASE("straighten agrees with randomized rewrite orders")
{
    std::mt19937_64 rng(11);
    const std::vector<Word> words{
        {{1, 3}, {2, 3}},
        {{1, 2}, {1, 3}},
        {{2, 4}, {1, 4}, {3, 4}},
        {{1, 4}, {1, 3}, {2, 4}},
        {{3, 4}, {2, 3}, {1, 2}},
        {{1, 4}, {2, 4}, {3, 4}, {1, 2}},
    };
    for (const Word& w : words)
        for (int parity : {0, 1}) {
            const auto reference = straighten(w, parity);
            for (int s = 0; s < 100; ++s)
                CHECK(straighten_randomized(w, parity, rng) == reference);
        }
}

TEST_CASE("multiply")
{
    for (int m : {2, 3}) {
        auto alg = algebra(3, m);
        const IntEl lhs = (gen(alg, 1, 2) + gen(alg, 1, 3)) * gen(alg, 2, 3);
        IntEl expected = gen(alg, 1, 2).scaled(0);
        expected += IntEl::from_word(alg, Integers{}, {{1, 2}, {2, 3}}).scaled(2);
        expected -= IntEl::from_word(alg, Integers{}, {{1, 2}, {1, 3}});
        CHECK(lhs == expected);
        CHECK(lhs.to_string() == "-e12*e13 + 2*e12*e23");

        // Independent route: expand the word sum and straighten in random order.
        std::mt19937_64 rng(3);
        IntegralCombination brute;
        for (const Word& w : {Word{{1, 2}, {2, 3}}, Word{{1, 3}, {2, 3}}})
            for (const auto& [mono, c] : straighten_randomized(w, alg->presentation().parity(), rng))
                brute[mono] += c;
        for (const auto& [idx, c] : lhs.terms())
            CHECK(brute.at(alg->monomial(idx)) == c);

        const IntEl x = parse_element(alg, Integers{}, "3*e12*e23 - e13");
        CHECK(IntEl::unit(alg, Integers{}) * x == x);
        CHECK(x * IntEl::unit(alg, Integers{}) == x);
    }
    CHECK_THROWS_AS(gen(algebra(3, 2), 1, 2) * gen(algebra(3, 4), 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(gen(algebra(3, 2), 1, 4), std::invalid_argument);
}

TEST_CASE("products of n generators vanish")
{
    for (int m : {2, 3}) {
        auto alg = algebra(3, m);
        const auto gens = alg->presentation().generators();
        for (const Edge& a : gens)
            for (const Edge& b : gens)
                for (const Edge& c : gens)
                    CHECK(straighten({a, b, c}, alg->presentation().parity()).empty());
        auto alg4 = algebra(4, m);
        const auto gens4 = alg4->presentation().generators();
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<std::size_t> pick(0, gens4.size() - 1);
        for (int t = 0; t < 300; ++t)
            CHECK(straighten({gens4[pick(rng)], gens4[pick(rng)], gens4[pick(rng)], gens4[pick(rng)]}, m % 2 == 0).empty());
    }
}

TEST_CASE("basis")
{
    const auto p = build_presentation(3, 2);
    auto names = [](const std::vector<Monomial>& ms) {
        std::vector<std::string> out;
        for (const auto& mono : ms)
            out.push_back(mono.to_string());
        return out;
    };
    CHECK(names(basis(p, 1)) == std::vector<std::string>{"e12", "e13", "e23"});
    CHECK(names(basis(p, 2)) == std::vector<std::string>{"e12*e13", "e12*e23"});
    CHECK(basis(p, 3).empty());
    CHECK(basis(p, 0).size() == 1);
    for (const auto& mono : basis(build_presentation(5, 3), 3))
        CHECK(mono.is_admissible());
}

TEST_CASE("poincare table")
{
    // Oracle: count admissible products among all subsets of edges, taken in
    // canonical order.
    auto brute = [](int n) {
        const auto gens = build_presentation(n, 2).generators();
        std::vector<long> counts(gens.size() + 1, 0);
        for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
            Monomial mono;
            for (std::size_t g = 0; g < gens.size(); ++g)
                if (mask & (1u << g))
                    mono.factors.push_back(gens[g]);
            std::sort(mono.factors.begin(), mono.factors.end(), canonical_less);
            if (mono.is_admissible())
                ++counts[mono.size()];
        }
        while (counts.size() > 1 && counts.back() == 0)
            counts.pop_back();
        return counts;
    };
    auto as_long = [](const std::vector<mpz_class>& v) {
        std::vector<long> out;
        for (const auto& x : v)
            out.push_back(x.get_si());
        return out;
    };
    CHECK(as_long(poincare_table(2)) == std::vector<long>{1, 1});
    CHECK(as_long(poincare_table(3)) == std::vector<long>{1, 3, 2});
    CHECK(as_long(poincare_table(4)) == std::vector<long>{1, 6, 11, 6});
    CHECK(as_long(poincare_table(1)) == std::vector<long>{1});
    long factorial = 1;
    for (int n = 1; n <= 5; ++n) {
        factorial *= n;
        const auto table = as_long(poincare_table(n));
        CHECK(table == brute(n));
        long total = 0;
        for (long c : table)
            total += c;
        CHECK(total == factorial);
    }
}

TEST_CASE("structure constants stay inside the basis")
{
    for (int n = 1; n <= 4; ++n)
        for (int m : {2, 3}) {
            const ArnoldAlgebra alg(build_presentation(n, m));
            for (std::size_t a = 0; a < alg.size(); ++a)
                for (std::size_t b = 0; b < alg.size(); ++b)
                    for (const auto& [k, c] : alg.product(a, b)) {
                        CHECK(k < alg.size());
                        CHECK(alg.factor_count(k) == alg.factor_count(a) + alg.factor_count(b));
                        CHECK(sgn(c) != 0);
                    }
        }
}

TEST_CASE("stability check")
{
    CHECK(stability_check(3, 4));
    CHECK(stability_check(2, 6));
    CHECK(stability_check(4, 4));
    CHECK(stability_check(4, 6));
    CHECK_THROWS_AS(stability_check(3, 5), std::invalid_argument);
}

TEST_CASE("element parser")
{
    auto alg = algebra(3, 2);
    CHECK(parse_element(alg, Integers{}, "e12 + e13").to_string() == "e12 + e13");
    CHECK(parse_element(alg, Integers{}, "-2e1_2*e2_3 + 1").to_string() == "1 - 2*e12*e23");
    CHECK(parse_element(alg, Integers{}, "e13 * e12") == parse_element(alg, Integers{}, "-e12*e13"));
    CHECK_THROWS_AS(parse_word_sum("e123"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word_sum("e12 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word_sum("x12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(alg, Integers{}, "e21"), std::invalid_argument);
}
