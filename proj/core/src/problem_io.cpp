#include "bvpdn/problem_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace bvpdn {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ProblemParseError("problem file: " + what); }

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) fail(where + " must be an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(where + " is missing \"" + key + "\"");
    return *it;
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) fail(where + " must be a number");
    return v.get<double>();
}

int integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) fail(where + " must be an integer");
    return v.get<int>();
}

Complex complex_value(const json& v, const std::string& where) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_object()) {
        const double re = number(field(v, "re", where), where + ".re");
        const double im = v.contains("im") ? number(v["im"], where + ".im") : 0.0;
        return {re, im};
    }
    fail(where + " must be a number or {\"re\", \"im\"} object");
}

std::vector<Complex> complex_array(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where + " must be an array");
    std::vector<Complex> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(complex_value(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

ProblemData parse_poly(const json& doc) {
    const json& terms = field(doc, "terms", "document");
    if (!terms.is_array()) fail("\"terms\" must be an array");
    const int max_degree = doc.contains("max_degree") ? integer(doc["max_degree"], "max_degree")
                                                      : BihPolynomial::kDefaultMaxDegree;
    std::vector<Monomial> monomials;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string where = "terms[" + std::to_string(i) + "]";
        const json& t = terms[i];
        Monomial m;
        m.p = integer(field(t, "p", where), where + ".p");
        m.q = integer(field(t, "q", where), where + ".q");
        m.coeff = complex_value(t, where);
        monomials.push_back(m);
    }
    try {
        return manufacture(BihPolynomial(std::move(monomials), max_degree));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

ProblemData parse_tabulated(const json& doc) {
    ProblemData data;
    data.provenance = Provenance::tabulated;
    try {
        data.gamma0 = BoundaryTrace::tabulated(complex_array(field(doc, "gamma0", "document"), "gamma0"));
        data.gamma = BoundaryTrace::tabulated(complex_array(field(doc, "gamma", "document"), "gamma"));
        const json& g = field(doc, "g", "document");
        const int n_r = integer(field(g, "n_r", "g"), "g.n_r");
        const int n_theta = integer(field(g, "n_theta", "g"), "g.n_theta");
        data.g = Source(TabulatedSource(n_r, n_theta, complex_array(field(g, "values", "g"), "g.values")));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    data.c = complex_value(field(doc, "c", "document"), "c");
    return data;
}

}  // namespace

ProblemData parse_problem_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    const json& type = field(doc, "type", "document");
    if (!type.is_string()) fail("\"type\" must be a string");
    const auto kind = type.get<std::string>();
    if (kind == "poly") return parse_poly(doc);
    if (kind == "tabulated") return parse_tabulated(doc);
    fail("unknown type \"" + kind + "\" (expected \"poly\" or \"tabulated\")");
}

ProblemData load_problem(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_json(buffer.str());
}

}  // namespace bvpdn
