#include "alg2/json_io.hpp"

#include <json.hpp>

namespace alg2 {

namespace {

using nlohmann::json;

const char* kConstantKeys[2][2] = {{"c11", "c12"}, {"c21", "c22"}};

Rational parse_exact_value(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw ParseError("input: exact values are integers or \"p/q\" strings");
}

Numeric parse_numeric_value(const json& v, double tol) {
    if (v.is_number()) return Numeric(v.get<double>(), 0.0, tol);
    if (v.is_array() && v.size() == 2)
        return Numeric(v[0].get<double>(), v[1].get<double>(), tol);
    if (v.is_string()) return Numeric(Rational::parse(v.get<std::string>()).to_double(), 0.0, tol);
    throw ParseError("input: numeric values are numbers or [re, im] pairs");
}

}  // namespace

InputDocument parse_input_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("input: JSON parse failure: ") + e.what());
    }
    InputDocument doc;
    std::string backend = j.value("backend", "exact");
    if (backend == "numeric")
        doc.numeric = true;
    else if (backend != "exact")
        throw ParseError("input: backend must be \"exact\" or \"numeric\"");
    if (j.contains("tolerance")) {
        doc.tolerance = j.at("tolerance").get<double>();
        if (!(doc.tolerance > 0)) throw ParseError("input: tolerance must be positive");
    }
    const json& c = j.at("constants");
    for (int i = 0; i < 2; ++i)
        for (int jj = 0; jj < 2; ++jj)
            for (int k = 0; k < 2; ++k) {
                std::string key =
                    std::string(kConstantKeys[i][jj]) + "_" + std::to_string(k + 1);
                if (!c.contains(key)) throw ParseError("input: missing constant " + key);
                if (doc.numeric)
                    doc.num.c[i][jj][k] = parse_numeric_value(c.at(key), doc.tolerance);
                else
                    doc.exact.c[i][jj][k] = parse_exact_value(c.at(key));
            }
    return doc;
}

ExactLabel parse_label(const std::string& text) {
    std::string name = text;
    std::vector<Rational> params;
    auto open = text.find('(');
    if (open != std::string::npos) {
        if (text.back() != ')') throw ParseError("label: missing ')' in " + text);
        name = text.substr(0, open);
        std::string body = text.substr(open + 1, text.size() - open - 2);
        std::size_t start = 0;
        while (start <= body.size() && !body.empty()) {
            auto comma = body.find(',', start);
            std::string piece = body.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            piece.erase(0, piece.find_first_not_of(" \t"));
            piece.erase(piece.find_last_not_of(" \t") + 1);
            try {
                params.push_back(Rational::parse(piece));
            } catch (const std::exception&) {
                throw ParseError("label: bad rational '" + piece + "' in " + text);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    auto family = family_from_string(name);
    if (!family) throw ParseError("label: unknown family " + name);
    if (static_cast<int>(params.size()) != family_arity(*family))
        throw ParseError("label: " + std::string(family_name(*family)) + " takes " +
                         std::to_string(family_arity(*family)) + " parameters");
    CanonicalLabel<Rational> raw{*family, params};
    if (auto issue = label_domain_violation(raw)) {
        if (issue->hard) throw InvalidInput(raw.to_string() + ": " + issue->why);
        return normalize_raw_label(*family, params);  // fold to the representative form
    }
    return raw;
}

std::string label_to_json(const ExactLabel& label) {
    json j;
    j["family"] = family_name(label.family);
    json params = json::array();
    for (const auto& p : label.params) params.push_back(p.to_string());
    j["params"] = params;
    return j.dump();
}

namespace {

template <class K>
std::string classification_json_impl(const Classification<K>& c) {
    json j;
    j["family"] = family_name(c.label.family);
    json params = json::array();
    for (const auto& p : c.label.params) params.push_back(p.to_string());
    j["params"] = params;
    json w = json::array();
    for (int r = 0; r < 2; ++r) {
        json row = json::array();
        for (int col = 0; col < 2; ++col) row.push_back(c.witness.m[r][col].to_string());
        w.push_back(row);
    }
    j["witness"] = w;
    return j.dump();
}

}  // namespace

std::string classification_to_json(const Classification<Rational>& c) {
    return classification_json_impl(c);
}
std::string classification_to_json(const Classification<Numeric>& c) {
    return classification_json_impl(c);
}

}  // namespace alg2
