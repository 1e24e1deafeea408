#include "macqt/io.hpp"

#include <algorithm>

namespace macqt {

Json poly_terms_json(const QtPoly& p) {
    // graded-lex descending
    std::vector<QtTerm> terms = p.terms();
    std::reverse(terms.begin(), terms.end());
    Json arr = Json::array();
    for (const QtTerm& t : terms) arr.push_back({t.c.get_str(), t.qe, t.te});
    return arr;
}

QtPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial terms must be an array");
    std::vector<QtTerm> terms;
    for (const Json& t : j) {
        if (!t.is_array() || t.size() != 3) throw ParseError("polynomial term must be [c,i,j]");
        mpz_class c;
        if (t[0].is_string()) {
            if (c.set_str(t[0].get<std::string>(), 10) != 0) throw ParseError("bad big-integer literal");
        } else if (t[0].is_number_integer()) {
            c = mpz_class(t[0].get<long>());
        } else {
            throw ParseError("polynomial coefficient must be a string or integer");
        }
        const int qe = t[1].get<int>(), te = t[2].get<int>();
        if (qe < 0 || te < 0) throw ParseError("polynomial exponents must be nonnegative");
        terms.push_back({qe, te, std::move(c)});
    }
    return QtPoly::from_terms(std::move(terms));
}

Json to_json(const QtScalar& s) {
    Json j;
    j["num"] = poly_terms_json(s.num());
    j["den"] = poly_terms_json(s.den());
    return j;
}

QtScalar qtscalar_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("scalar must be {num, den}");
    return QtScalar::normalize(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

Json to_json(const Partition& p) {
    Json arr = Json::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("partition must be an array");
    std::vector<int> parts;
    for (const Json& v : j) parts.push_back(v.get<int>());
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Partition partition_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty partition literal");
    if (s == "0" || s == "[]") return Partition();
    std::string body = s;
    if (body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t next = body.find(',', pos);
        if (next == std::string::npos) next = body.size();
        const std::string tok = body.substr(pos, next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad partition part '" + tok + "'");
        parts.push_back(std::stoi(tok));
        pos = next + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Json to_json(const SymFun& f) {
    Json j;
    j["basis"] = std::string(1, basis_letter(f.basis()));
    Json terms = Json::array();
    for (const auto& [lam, c] : f.terms()) {
        Json t;
        t["part"] = to_json(lam);
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

SymFun symfun_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw ParseError("symmetric function must be {basis, terms}");
    const std::string b = j["basis"].get<std::string>();
    if (b.size() != 1) throw ParseError("unknown basis '" + b + "'");
    const auto basis = basis_from_letter(b[0]);
    if (!basis) throw ParseError("unknown basis '" + b + "'");
    SymFun f(*basis);
    for (const Json& t : j["terms"])
        f.add_term(partition_from_json(t.at("part")), qtscalar_from_json(t.at("coeff")));
    return f;
}

Json to_json(const HExp& f) {
    Json j;
    j["basis"] = "H";
    Json terms = Json::array();
    for (const auto& [mu, c] : f.terms()) {
        Json t;
        t["part"] = to_json(mu);
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

HExp hexp_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw ParseError("expansion must be {basis, terms}");
    if (j["basis"].get<std::string>() != "H") throw ParseError("expected basis tag H");
    HExp f;
    for (const Json& t : j["terms"])
        f.add_term(partition_from_json(t.at("part")), qtscalar_from_json(t.at("coeff")));
    return f;
}

Json to_json(const StandardTableau& t) {
    Json arr = Json::array();
    for (const auto& row : t.rows()) {
        Json r = Json::array();
        for (int v : row) r.push_back(v);
        arr.push_back(std::move(r));
    }
    return arr;
}

} // namespace macqt
