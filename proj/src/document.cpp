#include "polyharm/document.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace polyharm {

using nlohmann::json;
using nlohmann::ordered_json;

std::string dockind_name(DocKind k) {
    switch (k) {
        case DocKind::NPolyDoc: return "npoly";
        case DocKind::LaurentDoc: return "laurent";
        case DocKind::NCPolyDoc: return "ncpoly";
        case DocKind::ProfileDoc: return "profile";
        case DocKind::TableDoc: return "table";
        case DocKind::VerdictDoc: return "verdict";
    }
    throw std::logic_error("dockind_name: bad kind");
}

DocKind dockind_from_name(const std::string& name) {
    if (name == "npoly") return DocKind::NPolyDoc;
    if (name == "laurent") return DocKind::LaurentDoc;
    if (name == "ncpoly") return DocKind::NCPolyDoc;
    if (name == "profile") return DocKind::ProfileDoc;
    if (name == "table") return DocKind::TableDoc;
    if (name == "verdict") return DocKind::VerdictDoc;
    throw std::invalid_argument("unknown document kind '" + name + "'");
}

Document make_npoly_doc(const std::string& input, const QPoly& p) {
    return Document{DocKind::NPolyDoc, input, p};
}
Document make_laurent_doc(const std::string& input, const LaurentU& f) {
    return Document{DocKind::LaurentDoc, input, f};
}
Document make_ncpoly_doc(const std::string& input, const NCPoly& p) {
    return Document{DocKind::NCPolyDoc, input, p};
}
Document make_profile_doc(const std::string& input, const AsymProfile& pr) {
    return Document{DocKind::ProfileDoc, input, pr};
}
Document make_table_doc(const std::string& input, TablePayload t) {
    return Document{DocKind::TableDoc, input, std::move(t)};
}
Document make_verdict_doc(const std::string& input, VerdictPayload v) {
    return Document{DocKind::VerdictDoc, input, std::move(v)};
}

OutputFormat format_from_name(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "latex") return OutputFormat::Latex;
    throw std::invalid_argument("unknown format '" + name + "' (expected json|csv|latex)");
}

namespace {

ordered_json payload_json(const Document& d) {
    ordered_json p;
    switch (d.kind) {
        case DocKind::NPolyDoc: {
            const auto& poly = std::get<QPoly>(d.payload);
            p = ordered_json::array();
            for (size_t k = 0; k < poly.coeffs().size(); ++k)
                if (poly.coeffs()[k] != 0)
                    p.push_back({{"power", k}, {"coeff", rat_str(poly.coeffs()[k])}});
            break;
        }
        case DocKind::LaurentDoc: {
            const auto& f = std::get<LaurentU>(d.payload);
            p = ordered_json::array();
            for (const auto& [k, a] : f.terms())
                p.push_back({{"upower", k}, {"coeff", rat_str(a)}});
            break;
        }
        case DocKind::NCPolyDoc: {
            const auto& poly = std::get<NCPoly>(d.payload);
            p = ordered_json::array();
            for (const auto& [w, c] : poly.terms())
                p.push_back({{"word", w.indices()}, {"coeff", rat_str(c)}});
            break;
        }
        case DocKind::ProfileDoc: {
            const auto& pr = std::get<AsymProfile>(d.payload);
            p["n"] = pr.degree;
            p["C"] = rat_str(pr.lead_h);
            p["B"] = rat_str(pr.lead_li);
            break;
        }
        case DocKind::TableDoc: {
            const auto& t = std::get<TablePayload>(d.payload);
            p["kind"] = t.kind;
            p["max_grade"] = t.max_grade;
            p["columns"] = t.columns;
            p["rows"] = t.rows;
            break;
        }
        case DocKind::VerdictDoc: {
            const auto& v = std::get<VerdictPayload>(d.payload);
            p["suite"] = v.suite;
            p["max_grade"] = v.max_grade;
            p["seed"] = v.seed;
            p["checks"] = ordered_json::array();
            for (const auto& c : v.checks) {
                ordered_json line{{"name", c.name}, {"pass", c.pass}};
                if (!c.detail.empty()) line["detail"] = c.detail;
                p["checks"].push_back(line);
            }
            p["pass"] = v.pass;
            break;
        }
    }
    return p;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string serialize_csv(const Document& d) {
    std::ostringstream out;
    switch (d.kind) {
        case DocKind::NPolyDoc: {
            const auto& poly = std::get<QPoly>(d.payload);
            out << "power,coeff\n";
            for (size_t k = 0; k < poly.coeffs().size(); ++k)
                if (poly.coeffs()[k] != 0) out << k << "," << rat_str(poly.coeffs()[k]) << "\n";
            break;
        }
        case DocKind::LaurentDoc: {
            const auto& f = std::get<LaurentU>(d.payload);
            out << "upower,coeff\n";
            for (const auto& [k, a] : f.terms()) out << k << "," << rat_str(a) << "\n";
            break;
        }
        case DocKind::NCPolyDoc: {
            const auto& poly = std::get<NCPoly>(d.payload);
            out << "word,coeff\n";
            for (const auto& [w, c] : poly.terms())
                out << csv_escape(w.str()) << "," << rat_str(c) << "\n";
            break;
        }
        case DocKind::ProfileDoc: {
            const auto& pr = std::get<AsymProfile>(d.payload);
            out << "n,C,B\n" << pr.degree << "," << rat_str(pr.lead_h) << ","
                << rat_str(pr.lead_li) << "\n";
            break;
        }
        case DocKind::TableDoc: {
            const auto& t = std::get<TablePayload>(d.payload);
            for (size_t i = 0; i < t.columns.size(); ++i)
                out << (i ? "," : "") << csv_escape(t.columns[i]);
            out << "\n";
            for (const auto& row : t.rows) {
                for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
                out << "\n";
            }
            break;
        }
        case DocKind::VerdictDoc: {
            const auto& v = std::get<VerdictPayload>(d.payload);
            out << "check,pass\n";
            for (const auto& c : v.checks) out << csv_escape(c.name) << "," << (c.pass ? "1" : "0") << "\n";
            out << "all," << (v.pass ? "1" : "0") << "\n";
            break;
        }
    }
    return out.str();
}

std::string serialize_latex(const Document& d) {
    std::ostringstream out;
    auto row2 = [&](const std::string& a, const std::string& b) { out << a << " & " << b << " \\\\\n"; };
    switch (d.kind) {
        case DocKind::NPolyDoc:
            row2(d.input, std::get<QPoly>(d.payload).str("N"));
            break;
        case DocKind::LaurentDoc:
            row2(d.input, std::get<LaurentU>(d.payload).str());
            break;
        case DocKind::NCPolyDoc:
            row2(d.input, std::get<NCPoly>(d.payload).str());
            break;
        case DocKind::ProfileDoc: {
            const auto& pr = std::get<AsymProfile>(d.payload);
            out << d.input << " & " << pr.degree << " & " << rat_str(pr.lead_h) << " & "
                << rat_str(pr.lead_li) << " \\\\\n";
            break;
        }
        case DocKind::TableDoc: {
            const auto& t = std::get<TablePayload>(d.payload);
            for (const auto& row : t.rows) {
                for (size_t i = 0; i < row.size(); ++i) out << (i ? " & " : "") << row[i];
                out << " \\\\\n";
            }
            break;
        }
        case DocKind::VerdictDoc: {
            const auto& v = std::get<VerdictPayload>(d.payload);
            for (const auto& c : v.checks) row2(c.name, c.pass ? "pass" : "fail");
            break;
        }
    }
    return out.str();
}

}  // namespace

std::string serialize_json(const Document& d) {
    ordered_json j;
    j["kind"] = dockind_name(d.kind);
    j["meta"] = {{"input", d.input}, {"version", kArtifactVersion}};
    j["payload"] = payload_json(d);
    return j.dump(2) + "\n";
}

std::string serialize(const Document& d, OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return serialize_json(d);
        case OutputFormat::Csv: return serialize_csv(d);
        case OutputFormat::Latex: return serialize_latex(d);
    }
    throw std::logic_error("serialize: bad format");
}

Document parse_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("parse_document: ") + e.what());
    }
    Document d;
    d.kind = dockind_from_name(j.at("kind").get<std::string>());
    d.input = j.at("meta").at("input").get<std::string>();
    const json& p = j.at("payload");
    switch (d.kind) {
        case DocKind::NPolyDoc: {
            size_t maxp = 0;
            for (const auto& t : p) maxp = std::max(maxp, t.at("power").get<size_t>());
            std::vector<Rat> c(p.empty() ? 0 : maxp + 1, Rat(0));
            for (const auto& t : p)
                c[t.at("power").get<size_t>()] = rat_parse(t.at("coeff").get<std::string>());
            d.payload = QPoly(std::move(c));
            break;
        }
        case DocKind::LaurentDoc: {
            LaurentU f;
            for (const auto& t : p)
                f.add_term(t.at("upower").get<long>(), rat_parse(t.at("coeff").get<std::string>()));
            d.payload = f;
            break;
        }
        case DocKind::NCPolyDoc: {
            NCPoly q;
            for (const auto& t : p) {
                std::vector<uint32_t> idx = t.at("word").get<std::vector<uint32_t>>();
                q.add_term(Word(std::move(idx)), rat_parse(t.at("coeff").get<std::string>()));
            }
            d.payload = q;
            break;
        }
        case DocKind::ProfileDoc: {
            AsymProfile pr;
            pr.degree = p.at("n").get<uint64_t>();
            pr.lead_h = rat_parse(p.at("C").get<std::string>());
            pr.lead_li = rat_parse(p.at("B").get<std::string>());
            d.payload = pr;
            break;
        }
        case DocKind::TableDoc: {
            TablePayload t;
            t.kind = p.at("kind").get<std::string>();
            t.max_grade = p.at("max_grade").get<uint64_t>();
            t.columns = p.at("columns").get<std::vector<std::string>>();
            t.rows = p.at("rows").get<std::vector<std::vector<std::string>>>();
            d.payload = std::move(t);
            break;
        }
        case DocKind::VerdictDoc: {
            VerdictPayload v;
            v.suite = p.at("suite").get<std::string>();
            v.max_grade = p.at("max_grade").get<uint64_t>();
            v.seed = p.at("seed").get<uint64_t>();
            for (const auto& c : p.at("checks")) {
                CheckLine line;
                line.name = c.at("name").get<std::string>();
                line.pass = c.at("pass").get<bool>();
                if (c.contains("detail")) line.detail = c.at("detail").get<std::string>();
                v.checks.push_back(std::move(line));
            }
            v.pass = p.at("pass").get<bool>();
            d.payload = std::move(v);
            break;
        }
    }
    return d;
}

}  // namespace polyharm
