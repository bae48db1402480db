#include <doctest.h>

#include "polyharm/document.hpp"
#include "polyharm/harmonic.hpp"
#include "polyharm/polylog.hpp"
#include "polyharm/verify.hpp"

using namespace polyharm;

TEST_CASE("rational text forms") {
    CHECK(rat_str(make_rat(3, 2)) == "3/2");
    CHECK(rat_str(make_rat(-4, 2)) == "-2");
    CHECK(rat_str(Rat(7)) == "7");
    CHECK(rat_parse("3/2") == make_rat(3, 2));
    CHECK(rat_parse("-2") == Rat(-2));
    CHECK(rat_parse("+5/10") == make_rat(1, 2));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("2x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
}

TEST_CASE("json round trip for every document kind") {
    const Document npoly = make_npoly_doc("y2.y1", hsum(Word({2, 1})));
    CHECK(parse_document(serialize_json(npoly)) == npoly);

    const Document laurent = make_laurent_doc("y1.y1", polylog_op(Word({1, 1})));
    CHECK(parse_document(serialize_json(laurent)) == laurent);

    const Document ncpoly = make_ncpoly_doc("product", parse_ncpoly("3/2*y2.y1 + y0 - 1/6*e"));
    CHECK(parse_document(serialize_json(ncpoly)) == ncpoly);

    const Document profile = make_profile_doc("p", AsymProfile{8, make_rat(5, 8), Rat(25200)});
    CHECK(parse_document(serialize_json(profile)) == profile);

    TablePayload t;
    t.kind = "C";
    t.max_grade = 2;
    t.columns = {"word", "C"};
    t.rows = {{"e", "1"}, {"y0", "1"}, {"y1", "1/2"}, {"y0.y0", "1/2"}};
    const Document table = make_table_doc("table", t);
    CHECK(parse_document(serialize_json(table)) == table);

    VerdictPayload v;
    v.suite = "chi";
    v.max_grade = 4;
    v.seed = 9;
    v.checks = {{"chi(1) = 1", true, ""}, {"transport", true, "12 instances"}};
    v.pass = true;
    const Document verdict = make_verdict_doc("chi", v);
    CHECK(parse_document(serialize_json(verdict)) == verdict);
}

TEST_CASE("json layout carries kind, meta, payload") {
    const std::string s = serialize_json(make_npoly_doc("y1", hsum(Word({1}))));
    CHECK(s.find("\"kind\": \"npoly\"") != std::string::npos);
    CHECK(s.find("\"input\": \"y1\"") != std::string::npos);
    CHECK(s.find("\"version\"") != std::string::npos);
    CHECK(s.find("\"power\"") != std::string::npos);
    CHECK(s.find("\"1/2\"") != std::string::npos);
}

TEST_CASE("csv and latex shapes") {
    const Document d = make_profile_doc("p", AsymProfile{8, make_rat(5, 8), Rat(25200)});
    CHECK(serialize(d, OutputFormat::Csv) == "n,C,B\n8,5/8,25200\n");
    CHECK(serialize(d, OutputFormat::Latex) == "p & 8 & 5/8 & 25200 \\\\\n");
    CHECK(format_from_name("json") == OutputFormat::Json);
    CHECK_THROWS_AS(format_from_name("yaml"), std::invalid_argument);
}

TEST_CASE("malformed document text is rejected") {
    CHECK_THROWS_AS(parse_document("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_document("{\"kind\": \"nope\", \"meta\": {\"input\": \"\"}}"),
                    std::invalid_argument);
}

TEST_CASE("verify reports are reproducible") {
    const VerdictPayload a = verify::run_suite("chi", 4, 11);
    const VerdictPayload b = verify::run_suite("chi", 4, 11);
    CHECK(verify::report_text(a) == verify::report_text(b));
    CHECK(serialize_json(make_verdict_doc("chi", a)) == serialize_json(make_verdict_doc("chi", b)));
    CHECK(a.pass);
    CHECK_THROWS_AS(verify::run_suite("nosuch", 4, 1), std::invalid_argument);
}
