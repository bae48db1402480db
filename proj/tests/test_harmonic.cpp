#include <doctest.h>

#include "polyharm/harmonic.hpp"

using namespace polyharm;

namespace {

// product of linear factors (a*x + b) over a common denominator
QPoly from_factors(std::initializer_list<std::pair<long, long>> linear, const Rat& denom) {
    QPoly p(denom);
    for (auto [a, b] : linear) p = p * QPoly({Rat(b), Rat(a)});
    return p;
}

}  // namespace

TEST_CASE("difference solver") {
    CHECK(solve_difference(QPoly(Rat(1))) == QPoly::variable());
    // P(x) = x -> binom(x,2)
    CHECK(solve_difference(QPoly::variable()) == QPoly::binom_basis(2));
    // P(N) = N+1 with f(0) = 0 -> N(N+1)/2
    const QPoly f = solve_difference(QPoly({Rat(1), Rat(1)}));
    CHECK(f == from_factors({{1, 0}, {1, 1}}, make_rat(1, 2)));
    CHECK(solve_difference(QPoly()).is_zero());
}

TEST_CASE("harmonic sums of single letters and short words") {
    CHECK(hsum(Word()) == QPoly(Rat(1)));
    CHECK(hsum(Word({0})) == QPoly::variable());
    CHECK(hsum(Word({1})) == from_factors({{1, 0}, {1, 1}}, make_rat(1, 2)));
    CHECK(hsum(Word({2})) == from_factors({{1, 0}, {1, 1}, {2, 1}}, make_rat(1, 6)));
    CHECK(hsum(Word({0, 0})) == from_factors({{1, 0}, {1, -1}}, make_rat(1, 2)));
    // N(N-1)(N+1)(12N^2+15N+2)/120
    QPoly expect = from_factors({{1, 0}, {1, -1}, {1, 1}}, make_rat(1, 120));
    expect = expect * QPoly({Rat(2), Rat(15), Rat(12)});
    CHECK(hsum(Word({2, 1})) == expect);
}

TEST_CASE("nested-sum oracle") {
    CHECK(hsum_brute(Word({1}), 3) == 6);
    CHECK(hsum_brute(Word({1, 1}), 3) == 11);  // 2 + 3 + 6
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned long N = 0; N <= 8; ++N)
            CHECK(hsum_brute(Word(std::vector<uint32_t>(n, 0)), N) == Rat(binomial(N, n)));
    // polynomial matches the sums it interpolates
    for (const Word& w : {Word({1, 1}), Word({2, 1}), Word({0, 2, 1})})
        for (unsigned long N = 0; N <= 10; ++N)
            CHECK(hsum(w).eval(Rat(Int(N))) == hsum_brute(w, N));
}

TEST_CASE("linear extension") {
    CHECK(hsum_poly(NCPoly(Word({0}))) == QPoly::variable());
    NCPoly p;
    p.add_term(Word({1, 1}), 2);
    p.add_term(Word({2}), 1);
    const QPoly square = hsum(Word({1})) * hsum(Word({1}));
    CHECK(hsum_poly(p) == square);
    CHECK(hsum_poly(NCPoly()).is_zero());
}

TEST_CASE("factored quotient on positive words") {
    CHECK(gfactor(Word({1})) == QPoly(make_rat(1, 2)));
    CHECK(gfactor(Word({2})) == QPoly({make_rat(1, 6), make_rat(2, 6)}));   // (2N+1)/6
    CHECK(gfactor(Word({1, 1})) == QPoly({make_rat(2, 24), make_rat(3, 24)}));  // (3N+2)/24
    CHECK_THROWS_AS(gfactor(Word({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(gfactor(Word()), std::invalid_argument);
}

TEST_CASE("monomials as harmonic combinations") {
    CHECK(power_as_hsums(1) == NCPoly(Word({0})));

    NCPoly k2;
    k2.add_term(Word({0}), -1);
    k2.add_term(Word({1}), 2);
    CHECK(power_as_hsums(2) == k2);

    NCPoly k3;
    k3.add_term(Word({0}), 1);
    k3.add_term(Word({1}), -3);
    k3.add_term(Word({2}), 3);
    CHECK(power_as_hsums(3) == k3);

    for (unsigned k = 1; k <= 8; ++k) CHECK(hsum_poly(power_as_hsums(k)) == QPoly::monomial(k));
    CHECK_THROWS_AS(power_as_hsums(0), std::invalid_argument);
}

TEST_CASE("Faulhaber-style quotient formula") {
    ExtBernoulliFamily fam;
    CHECK(hsum_via_beta(Word({0}), fam) == QPoly::variable());
    CHECK(hsum_via_beta(Word({1}), fam) == hsum(Word({1})));

    QPoly expect = QPoly(make_rat(1, 120));
    for (auto [a, b] : {std::pair{1L, 0L}, {1L, -1L}, {1L, 1L}})
        expect = expect * QPoly({Rat(b), Rat(a)});
    expect = expect * QPoly({Rat(-2), Rat(5), Rat(8)});  // 8N^2+5N-2
    CHECK(hsum(Word({1, 2})) == expect);
    CHECK(hsum_via_beta(Word({1, 2}), fam) == expect);

    ExtBernoulliFamily noisy;
    noisy.set_constant(Word({2}), make_rat(3, 11));
    noisy.set_constant(Word({3}), make_rat(-2, 5));
    noisy.set_constant(Word({2, 3}), make_rat(7, 3));
    CHECK(hsum_via_beta(Word({1, 2}), noisy) == expect);
}

TEST_CASE("stuffle morphism and degree") {
    for (const Word& u : {Word({1}), Word({0, 2})})
        for (const Word& v : {Word({2}), Word({1, 1})}) {
            CHECK(hsum(u) * hsum(v) == hsum_poly(stuffle(u, v)));
        }
    for (const Word& w : words_up_to_grade(6)) {
        CHECK(hsum(w).degree() == static_cast<long>(w.grade()));
        if (w.empty()) continue;
        CHECK(hsum(w).eval(0) == 0);
    }
}
