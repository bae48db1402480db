#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyharm/asymptotics.hpp"
#include "polyharm/laurent.hpp"
#include "polyharm/ncpoly.hpp"
#include "polyharm/qpoly.hpp"

namespace polyharm {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class DocKind { NPolyDoc, LaurentDoc, NCPolyDoc, ProfileDoc, TableDoc, VerdictDoc };

std::string dockind_name(DocKind k);
DocKind dockind_from_name(const std::string& name);

struct TablePayload {
    std::string kind;  // C, B, H, Li, top
    uint64_t max_grade = 0;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    bool operator==(const TablePayload& o) const = default;
};

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
    bool operator==(const CheckLine& o) const = default;
};

struct VerdictPayload {
    std::string suite;
    uint64_t max_grade = 0;
    uint64_t seed = 0;
    std::vector<CheckLine> checks;
    bool pass = false;
    bool operator==(const VerdictPayload& o) const = default;
};

// Machine-readable result of a CLI command. Rationals travel as "p/q"
// strings; polynomial payloads list nonzero coefficients with explicit
// powers, so serialization round-trips losslessly.
struct Document {
    DocKind kind;
    std::string input;  // echo of the command input
    std::variant<QPoly, LaurentU, NCPoly, AsymProfile, TablePayload, VerdictPayload> payload;

    bool operator==(const Document& o) const = default;
};

Document make_npoly_doc(const std::string& input, const QPoly& p);
Document make_laurent_doc(const std::string& input, const LaurentU& f);
Document make_ncpoly_doc(const std::string& input, const NCPoly& p);
Document make_profile_doc(const std::string& input, const AsymProfile& pr);
Document make_table_doc(const std::string& input, TablePayload t);
Document make_verdict_doc(const std::string& input, VerdictPayload v);

enum class OutputFormat { Json, Csv, Latex };
OutputFormat format_from_name(const std::string& name);  // throws std::invalid_argument

std::string serialize_json(const Document& d);  // pretty-printed, stable key order
std::string serialize(const Document& d, OutputFormat f);

// Inverse of serialize_json; throws std::invalid_argument on malformed input.
Document parse_document(const std::string& json_text);

}  // namespace polyharm
