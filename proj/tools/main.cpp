// Command-line front end: exact harmonic sums and polylogarithms at
// non-positive multi-indices, quasi-shuffle products, asymptotic profiles,
// identity verification, and table export.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse/usage error,
// 3 domain error.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "polyharm/asymptotics.hpp"
#include "polyharm/document.hpp"
#include "polyharm/harmonic.hpp"
#include "polyharm/ncpoly.hpp"
#include "polyharm/polylog.hpp"
#include "polyharm/toplaw.hpp"
#include "polyharm/verify.hpp"

using namespace polyharm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;

void emit(const Document& d, OutputFormat fmt) { std::cout << serialize(d, fmt); }

TablePayload build_table(const std::string& kind, uint64_t max_grade) {
    TablePayload t;
    t.kind = kind;
    t.max_grade = max_grade;
    if (kind == "C" || kind == "B") {
        t.columns = {"word", kind};
        for (const Word& w : words_up_to_grade(max_grade)) {
            const Rat v = kind == "C" ? cminus(w) : bminus(w);
            t.rows.push_back({w.str(), rat_str(v)});
        }
    } else if (kind == "H") {
        t.columns = {"word", "H"};
        for (const Word& w : words_up_to_grade(max_grade))
            t.rows.push_back({w.str(), hsum(w).str("N")});
    } else if (kind == "Li") {
        t.columns = {"word", "Li"};
        for (const Word& w : words_up_to_grade(max_grade))
            t.rows.push_back({w.str(), polylog_op(w).str()});
    } else if (kind == "top") {
        t.columns = {"m", "n", "top"};
        for (uint64_t m = 0; m + m + 2 <= max_grade; ++m)
            for (uint64_t n = m; m + n + 2 <= max_grade; ++n) {
                const NCPoly p = top(Word::letter(static_cast<uint32_t>(m)),
                                     Word::letter(static_cast<uint32_t>(n)))
                                     .to_ncpoly();
                t.rows.push_back({std::to_string(m), std::to_string(n), p.str()});
            }
    } else {
        throw std::invalid_argument("unknown table kind '" + kind + "' (expected C|B|H|Li|top)");
    }
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact harmonic sums and polylogarithms at non-positive multi-indices"};
    app.require_subcommand(1);

    std::string format_name = "json";
    app.add_option("--format", format_name, "output format: json|csv|latex")
        ->capture_default_str();

    std::string word_arg, law_arg, lhs_arg, rhs_arg, poly_arg;
    std::string suite_arg = "all", kind_arg;
    uint64_t max_grade = 6, seed = 0;

    CLI::App* hsum_cmd = app.add_subcommand("hsum", "harmonic sum of a word as a polynomial in N");
    hsum_cmd->add_option("word", word_arg, "word, e.g. y2.y1 or 2,1 or e")->required();

    CLI::App* polylog_cmd =
        app.add_subcommand("polylog", "polylogarithm of a word over u = (1-z)^{-1}");
    polylog_cmd->add_option("word", word_arg, "word")->required();

    CLI::App* product_cmd = app.add_subcommand("product", "product of two polynomials");
    product_cmd->add_option("law", law_arg, "shuffle|stuffle|top")->required();
    product_cmd->add_option("lhs", lhs_arg, "left factor")->required();
    product_cmd->add_option("rhs", rhs_arg, "right factor")->required();

    CLI::App* top_cmd = app.add_subcommand("top", "top product of two polynomials");
    top_cmd->add_option("lhs", lhs_arg, "left factor")->required();
    top_cmd->add_option("rhs", rhs_arg, "right factor")->required();

    CLI::App* profile_cmd =
        app.add_subcommand("profile", "asymptotic profile (n, C, B) of a polynomial");
    profile_cmd->add_option("poly", poly_arg, "polynomial")->required();

    CLI::App* kernel_cmd = app.add_subcommand("kernel", "kernel membership of a polynomial");
    kernel_cmd->add_option("poly", poly_arg, "polynomial")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run an identity suite");
    verify_cmd->add_option("suite,--suite", suite_arg,
                           "products|faulhaber|polylog-routes|character|top|kernel|chi|matrices|all");
    verify_cmd->add_option("max-grade,--max-grade", max_grade, "grade bound for word enumeration");
    verify_cmd->add_option("seed,--seed", seed, "seed for randomized checks");

    CLI::App* table_cmd = app.add_subcommand("table", "enumerate values in graded word order");
    table_cmd->add_option("kind", kind_arg, "C|B|H|Li|top")->required();
    table_cmd->add_option("max-grade,--max-grade", max_grade, "grade bound");
    table_cmd->add_option("format", format_name, "json|csv|latex (same as --format)");

    for (CLI::App* sub : {hsum_cmd, polylog_cmd, product_cmd, top_cmd, profile_cmd, kernel_cmd,
                          verify_cmd, table_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParseError;
    }

    try {
        const OutputFormat fmt = format_from_name(format_name);

        if (*hsum_cmd) {
            const Word w = parse_word(word_arg);
            emit(make_npoly_doc(word_arg, hsum(w)), fmt);
        } else if (*polylog_cmd) {
            const Word w = parse_word(word_arg);
            emit(make_laurent_doc(word_arg, polylog_op(w)), fmt);
        } else if (*product_cmd) {
            ProductLaw law;
            if (law_arg == "shuffle") law = ProductLaw::Shuffle;
            else if (law_arg == "stuffle") law = ProductLaw::Stuffle;
            else if (law_arg == "top") law = ProductLaw::Top;
            else throw ParseError(0, "unknown law '" + law_arg + "'");
            const NCPoly p = parse_ncpoly(lhs_arg);
            const NCPoly q = parse_ncpoly(rhs_arg);
            emit(make_ncpoly_doc(law_arg + "(" + lhs_arg + ", " + rhs_arg + ")",
                                 ncp_product(law, p, q)),
                 fmt);
        } else if (*top_cmd) {
            const NCPoly p = parse_ncpoly(lhs_arg);
            const NCPoly q = parse_ncpoly(rhs_arg);
            emit(make_ncpoly_doc("top(" + lhs_arg + ", " + rhs_arg + ")", top_poly(p, q)), fmt);
        } else if (*profile_cmd) {
            const NCPoly p = parse_ncpoly(poly_arg);
            const auto prof = asym_profile(p);
            if (!prof) {
                std::cerr << "domain error: polynomial is in the kernel; profile undefined\n";
                return kExitDomainError;
            }
            emit(make_profile_doc(poly_arg, *prof), fmt);
        } else if (*kernel_cmd) {
            const NCPoly p = parse_ncpoly(poly_arg);
            VerdictPayload v;
            v.suite = "kernel-membership";
            v.checks.push_back({"Li(P) = 0", kernel_member(p), ""});
            v.pass = v.checks[0].pass;
            emit(make_verdict_doc(poly_arg, v), fmt);
        } else if (*verify_cmd) {
            const VerdictPayload v = verify::run_suite(suite_arg, max_grade, seed);
            if (fmt == OutputFormat::Json)
                emit(make_verdict_doc(suite_arg, v), fmt);
            else
                std::cout << verify::report_text(v);
            if (!v.pass) return kExitVerifyFailed;
        } else if (*table_cmd) {
            emit(make_table_doc(kind_arg, build_table(kind_arg, max_grade)), fmt);
        }
        return kExitOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomainError;
    }
}
