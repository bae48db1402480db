#include <doctest.h>

#include "polyharm/ncpoly.hpp"
#include "polyharm/word.hpp"

using namespace polyharm;

TEST_CASE("weight and length") {
    CHECK(Word({2, 1, 5}).weight() == 8);
    CHECK(Word({2, 1, 5}).length() == 3);
    CHECK(Word().weight() == 0);
    CHECK(Word().length() == 0);
    CHECK(Word({0, 0}).weight() == 0);
    CHECK(Word({0, 0}).length() == 2);
    CHECK(Word({2, 1, 5}).grade() == 11);
}

TEST_CASE("graded word order") {
    // grade first, then length, then lexicographic indices
    CHECK(graded_less(Word(), Word({0})));
    CHECK(graded_less(Word({1}), Word({0, 0})));       // same grade 2, shorter first
    CHECK(graded_less(Word({0, 1}), Word({1, 0})));    // same grade/length, lex
    CHECK(!graded_less(Word({2, 1}), Word({2, 1})));
    CHECK(graded_less(Word({3}), Word({2, 1})));       // grade 4 < 5
}

TEST_CASE("graded enumeration covers each grade once") {
    const auto words = words_up_to_grade(5);
    // 1 + sum_{g<=5} 2^{g-1}
    CHECK(words.size() == 1 + 1 + 2 + 4 + 8 + 16);
    for (size_t i = 1; i < words.size(); ++i) CHECK(graded_less(words[i - 1], words[i]));
}

TEST_CASE("word text forms") {
    CHECK(parse_word("y2.y1.y5") == Word({2, 1, 5}));
    CHECK(parse_word("2,1,5") == Word({2, 1, 5}));
    CHECK(parse_word("5") == Word({5}));
    CHECK(parse_word("e") == Word());
    CHECK(parse_word("  y0 ") == Word({0}));
    CHECK(Word({2, 1, 5}).str() == "y2.y1.y5");
    CHECK(Word().str() == "e");
    CHECK_THROWS_AS(parse_word("y2..y1"), ParseError);
    CHECK_THROWS_AS(parse_word("y"), ParseError);
    CHECK_THROWS_AS(parse_word("y2.x1"), ParseError);
    CHECK_THROWS_AS(parse_word("y2 y1"), ParseError);
    try {
        parse_word("y2.z");
    } catch (const ParseError& e) {
        CHECK(e.pos == 3);
    }
}

TEST_CASE("shuffle examples") {
    CHECK(shuffle(Word({1}), Word()) == NCPoly(Word({1})));

    NCPoly expect12;
    expect12.add_term(Word({1, 2}), 1);
    expect12.add_term(Word({2, 1}), 1);
    CHECK(shuffle(Word({1}), Word({2})) == expect12);

    NCPoly expect125;
    expect125.add_term(Word({1, 2, 5}), 1);
    expect125.add_term(Word({2, 1, 5}), 1);
    expect125.add_term(Word({2, 5, 1}), 1);
    CHECK(shuffle(Word({1}), Word({2, 5})) == expect125);
}

TEST_CASE("stuffle examples") {
    NCPoly expect00;
    expect00.add_term(Word({0, 0}), 2);
    expect00.add_term(Word({0}), 1);
    CHECK(stuffle(Word({0}), Word({0})) == expect00);

    // y_m * y_n = y_m y_n + y_n y_m + y_{m+n}
    for (uint32_t m : {1u, 3u})
        for (uint32_t n : {2u, 7u}) {
            NCPoly expect;
            expect.add_term(Word({m, n}), 1);
            expect.add_term(Word({n, m}), 1);
            expect.add_term(Word({m + n}), 1);
            CHECK(stuffle(Word({m}), Word({n})) == expect);
        }

    NCPoly expect125;
    expect125.add_term(Word({1, 2, 5}), 1);
    expect125.add_term(Word({2, 1, 5}), 1);
    expect125.add_term(Word({2, 5, 1}), 1);
    expect125.add_term(Word({3, 5}), 1);
    expect125.add_term(Word({2, 6}), 1);
    CHECK(stuffle(Word({1}), Word({2, 5})) == expect125);
}

TEST_CASE("bilinear combination and product") {
    const NCPoly y1(Word({1}));
    CHECK(ncp_combine(1, y1, 1, y1) == Rat(2) * y1);

    NCPoly p = y1 + NCPoly(Word({2}));
    CHECK(ncp_product(ProductLaw::Stuffle, p, NCPoly::one()) == p);

    NCPoly expect;
    expect.add_term(Word({1, 2}), 6);
    expect.add_term(Word({2, 1}), 6);
    CHECK(ncp_product(ProductLaw::Shuffle, Rat(2) * y1, Rat(3) * NCPoly(Word({2}))) == expect);
}

TEST_CASE("ncpoly text round trip") {
    const NCPoly p = parse_ncpoly("3/2*y2.y1 + y0 - 1/6*e");
    CHECK(p.coeff(Word({2, 1})) == make_rat(3, 2));
    CHECK(p.coeff(Word({0})) == 1);
    CHECK(p.coeff(Word()) == make_rat(-1, 6));
    CHECK(p.support_size() == 3);
    CHECK(parse_ncpoly(p.str()) == p);

    CHECK(parse_ncpoly("6*y4.y2 + 12*y3.y3 - 9*y5").support_size() == 3);
    CHECK(parse_ncpoly("2,1 + y3").coeff(Word({2, 1})) == 1);
    CHECK(parse_ncpoly("-y1").coeff(Word({1})) == -1);
    CHECK(parse_ncpoly("y1 - y1").is_zero());
    CHECK(parse_ncpoly("3/2").coeff(Word()) == make_rat(3, 2));

    CHECK_THROWS_AS(parse_ncpoly("3*"), ParseError);
    CHECK_THROWS_AS(parse_ncpoly(""), ParseError);
    CHECK_THROWS_AS(parse_ncpoly("y1 + + y2"), ParseError);
    CHECK_THROWS_AS(parse_ncpoly("1/0*y1"), ParseError);
}

TEST_CASE("canonical form drops zero terms") {
    NCPoly p;
    p.add_term(Word({1}), make_rat(1, 2));
    p.add_term(Word({1}), make_rat(-1, 2));
    CHECK(p.is_zero());
    CHECK(p.support_size() == 0);
}

TEST_CASE("associativity spot checks") {
    const Word u({1}), v({0, 2}), t({1, 1});
    for (ProductLaw law : {ProductLaw::Shuffle, ProductLaw::Stuffle}) {
        const NCPoly uv = ncp_product(law, NCPoly(u), NCPoly(v));
        const NCPoly vt = ncp_product(law, NCPoly(v), NCPoly(t));
        CHECK(ncp_product(law, uv, NCPoly(t)) == ncp_product(law, NCPoly(u), vt));
    }
}
