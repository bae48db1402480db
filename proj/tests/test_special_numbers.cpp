#include <doctest.h>

#include "polyharm/special_numbers.hpp"

using namespace polyharm;

TEST_CASE("Bernoulli numbers, b1 = -1/2 convention") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == make_rat(-1, 2));
    CHECK(bernoulli(2) == make_rat(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == make_rat(-1, 30));
    CHECK(bernoulli(12) == make_rat(-691, 2730));
}

TEST_CASE("first-kind Stirling numbers against the rising factorial") {
    CHECK(stirling1(3, 1) == 2);
    CHECK(stirling1(4, 2) == 11);
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(stirling1(n, n) == 1);
        // expand x(x+1)...(x+n-1) independently
        QPoly rf(Rat(1));
        for (unsigned i = 0; i < n; ++i) rf = rf * (QPoly::variable() + QPoly(Rat(Int(i))));
        for (unsigned k = 0; k <= n; ++k) CHECK(Rat(stirling1(n, k)) == rf.coeff(k));
    }
}

TEST_CASE("second-kind Stirling numbers") {
    for (unsigned n = 1; n <= 8; ++n) CHECK(stirling2(n, 1) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    // recurrence cross-check
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 1; k <= n; ++k)
            CHECK(stirling2(n, k) == Int(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1));
}

TEST_CASE("second kind recovered from first-kind chains") {
    CHECK(stirling2_via_s1(4, 2) == Rat(7));
    CHECK(stirling2_via_s1(2, 1) == Rat(1));
    for (unsigned i = 1; i <= 10; ++i)
        for (unsigned j = 1; j <= i; ++j) CHECK(stirling2_via_s1(i, j) == Rat(stirling2(i, j)));
}

TEST_CASE("Eulerian numbers and polynomials") {
    for (unsigned n = 1; n <= 8; ++n) CHECK(eulerian_number(n, 0) == 1);
    CHECK(eulerian_number(2, 1) == 1);
    CHECK(eulerian_number(3, 1) == 4);
    CHECK(eulerian_number(3, 3) == 0);
    CHECK(eulerian_number(3, -1) == 0);
    CHECK(eulerian_poly(0) == ZPoly(Rat(1)));
    CHECK(eulerian_poly(3) == ZPoly({Rat(1), Rat(4), Rat(1)}));
    for (unsigned n = 1; n <= 10; ++n) {
        Int sum = 0;
        for (long k = 0; k < static_cast<long>(n); ++k) sum += eulerian_number(n, k);
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("extended Eulerian polynomials") {
    CHECK(ext_eulerian(Word({4})) == eulerian_poly(4));
    CHECK(ext_eulerian(Word({0})) == ZPoly(Rat(1)));
    CHECK(ext_eulerian(Word({1, 1})) == ZPoly({Rat(2), Rat(1)}));  // 2 + z
    // degree bound and integrality
    for (const Word& w : words_up_to_grade(8)) {
        const ZPoly a = ext_eulerian(w);
        CHECK(a.degree() <= static_cast<long>(w.weight()));
        for (const Rat& c : a.coeffs()) CHECK(is_integer(c));
    }
}

TEST_CASE("extended Bernoulli polynomials, default constants") {
    ExtBernoulliFamily fam;
    CHECK(fam.ext_bernoulli(Word()) == QPoly(Rat(1)));
    // single letters reproduce the classical Bernoulli polynomials
    for (unsigned s = 0; s <= 6; ++s) {
        QPoly classical;
        for (unsigned k = 0; k <= s; ++k)
            classical += (Rat(binomial(s, k)) * bernoulli(k)) * QPoly::monomial(s - k);
        CHECK(fam.ext_bernoulli(Word({s})) == classical);
    }
    CHECK(fam.ext_bernoulli(Word({1})) == QPoly({make_rat(-1, 2), Rat(1)}));  // z - 1/2

    // beta of y1 at N + 1 counts N unit steps
    const QPoly beta1 = fam.beta(Word({1}));
    CHECK(beta1.eval(4) == 3);
    CHECK(beta1.eval(1) == 0);
}

TEST_CASE("defining recurrence holds under arbitrary constants") {
    ExtBernoulliFamily fam;
    fam.set_constant(Word({2}), make_rat(5, 3));
    fam.set_constant(Word({2, 3}), make_rat(-7, 2));
    fam.set_constant(Word({3}), make_rat(1, 4));
    for (const Word w : {Word({2}), Word({3}), Word({2, 3}), Word({1, 2, 3})}) {
        const QPoly b = fam.ext_bernoulli(w);
        QPoly rhs;
        if (w.first() > 0)
            rhs = QPoly::monomial(w.first() - 1, Rat(w.first())) * fam.ext_bernoulli(w.suffix_from(1));
        CHECK(b.shifted(1) - b == rhs);
        CHECK(b.eval(0) == fam.constant(w));
    }
}

TEST_CASE("bprime recursion") {
    ExtBernoulliFamily fam;
    fam.set_constant(Word({2}), make_rat(1, 5));
    fam.set_constant(Word({3}), make_rat(2, 7));
    fam.set_constant(Word({2, 3}), make_rat(-3, 4));
    CHECK(fam.bprime(Word({3})) == fam.constant(Word({3})));
    // one-step unrolling: b'_{ab} = b_{ab} - b_b b'_a
    CHECK(fam.bprime(Word({2, 3})) ==
          fam.constant(Word({2, 3})) - fam.constant(Word({3})) * fam.constant(Word({2})));
}

TEST_CASE("Faulhaber matrix entries") {
    const MatrixQ m = build_M(4);  // rows i = 0..3, columns j = 1..4
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 0) == make_rat(1, 2));
    CHECK(m.at(1, 1) == make_rat(1, 2));
    CHECK(m.at(2, 0) == make_rat(1, 6));
    CHECK(m.at(2, 1) == make_rat(1, 2));
    CHECK(m.at(2, 2) == make_rat(1, 3));
    CHECK(m.at(0, 1) == 0);
}

TEST_CASE("u-power rewrite matrix entries") {
    const MatrixQ t = build_T(4);  // rows i = 1..4, columns j = 0..3
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 0) == 1);
    CHECK(t.at(1, 1) == 1);
    CHECK(t.at(2, 1) == make_rat(3, 2));
    CHECK(t.at(2, 2) == make_rat(1, 2));
    CHECK(t.at(0, 1) == 0);
}

TEST_CASE("binomial rewrite matrix") {
    const MatrixQ x = build_X(4);
    CHECK(x.at(0, 0) == 1);                 // 1! S2(1,1)
    CHECK(x.at(3, 1) == Rat(2 * 7));        // 2! S2(4,2)
    CHECK(x.at(3, 3) == Rat(24));           // 4! S2(4,4)
    CHECK(x.at(0, 2) == 0);
}

TEST_CASE("triangular family matrix and its closed-form inverse") {
    ExtBernoulliFamily fam;
    const Word w({2, 3});
    const MatrixQ d = build_D(w, fam);
    CHECK(d.at(0, 0) == 2);
    CHECK(d.at(1, 1) == 6);
    CHECK(d.at(1, 0) == Rat(2) * fam.constant(Word({3})));
    CHECK(d.at(0, 1) == 0);
    const MatrixQ v = build_Dinv(w, fam);
    CHECK(d * v == MatrixQ::identity(2));
    CHECK(v * d == MatrixQ::identity(2));

    ExtBernoulliFamily noisy;
    noisy.set_constant(Word({3}), make_rat(9, 2));
    noisy.set_constant(Word({2, 3}), make_rat(-1, 3));
    noisy.set_constant(Word({2}), make_rat(4, 7));
    const MatrixQ d2 = build_D(w, noisy);
    CHECK(d2 * build_Dinv(w, noisy) == MatrixQ::identity(2));

    CHECK_THROWS_AS(build_D(Word({2, 0}), fam), std::invalid_argument);
    CHECK_THROWS_AS(build_D(Word(), fam), std::invalid_argument);
}
