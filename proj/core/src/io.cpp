#include "suppos/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace suppos {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long parse_int(const std::string& s, const std::string& what) {
    if (s.empty()) fail("parse", "expected " + what);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("parse", "bad " + what + " '" + s + "'");
    return std::stol(s);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("io", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

Monomial parse_monomial(const std::string& text, int vars) {
    std::string s = strip_spaces(text);
    if (s.empty()) fail("parse", "empty monomial");
    if (s == "1") return Monomial::unit(vars);
    std::vector<int> e(vars, 0);
    for (const std::string& factor : split(s, '*')) {
        if (factor.empty() || factor[0] != 'x') fail("parse", "bad factor '" + factor + "'");
        std::string rest = factor.substr(1);
        std::string idx = rest, pow = "1";
        if (auto caret = rest.find('^'); caret != std::string::npos) {
            idx = rest.substr(0, caret);
            pow = rest.substr(caret + 1);
        }
        long k = parse_int(idx, "variable index");
        long p = parse_int(pow, "exponent");
        if (k < 1 || k > vars) fail("parse", "variable x" + idx + " outside 1..x" + std::to_string(vars));
        if (p < 1) fail("parse", "exponents must be positive");
        e[k - 1] += static_cast<int>(p);
    }
    return Monomial(std::move(e));
}

MonomialIdeal parse_ideal(const std::string& text) {
    std::istringstream in(text);
    std::string line, header;
    while (std::getline(in, line)) {
        header = trim(line);
        if (!header.empty()) break;
    }
    std::string squashed = strip_spaces(header);
    if (squashed.rfind("vars:", 0) != 0) fail("parse", "ideal files start with a 'vars: n' header");
    int n = static_cast<int>(parse_int(squashed.substr(5), "variable count"));

    std::string body;
    while (std::getline(in, line)) body += line + " ";
    body = strip_spaces(body);
    if (body.empty() || body == "0") return MonomialIdeal(n);

    std::vector<Monomial> gens;
    for (const std::string& piece : split(body, ',')) {
        if (piece.empty()) fail("parse", "stray comma in generator list");
        gens.push_back(parse_monomial(piece, n));
    }
    return MonomialIdeal::minimalize(n, std::move(gens));
}

MonomialIdeal read_ideal_file(const std::string& path) { return parse_ideal(slurp(path)); }

std::string print_ideal(const MonomialIdeal& ideal) {
    std::string out = "vars: " + std::to_string(ideal.vars()) + "\n";
    out += ideal.to_string();
    out += "\n";
    return out;
}

Poset parse_poset(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
    bool saw_elements = false;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty()) continue;
        std::string squashed = strip_spaces(t);
        if (squashed.rfind("elements:", 0) == 0) {
            saw_elements = true;
            std::string rest = squashed.substr(9);
            if (rest.empty()) continue;
            for (const std::string& e : split(rest, ','))
                if (!e.empty()) elements.push_back(e);
        } else if (squashed.rfind("covers:", 0) == 0) {
            std::string rest = squashed.substr(7);
            if (rest.empty()) continue;
            for (const std::string& pair : split(rest, ',')) {
                if (pair.empty()) continue;
                auto lt = pair.find('<');
                if (lt == std::string::npos) fail("parse", "cover '" + pair + "' lacks '<'");
                covers.emplace_back(pair.substr(0, lt), pair.substr(lt + 1));
            }
        } else {
            fail("parse", "unrecognized poset line '" + t + "'");
        }
    }
    if (!saw_elements) fail("parse", "poset files need an 'elements:' line");
    return Poset::from_covers(std::move(elements), std::move(covers));
}

Poset read_poset_file(const std::string& path) { return parse_poset(slurp(path)); }

std::string print_poset(const Poset& poset) {
    std::string out = "elements: ";
    const auto& els = poset.elements();
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (i) out += ',';
        out += els[i];
    }
    out += "\ncovers: ";
    auto covers = poset.covers();
    for (std::size_t i = 0; i < covers.size(); ++i) {
        if (i) out += ", ";
        out += covers[i].first + "<" + covers[i].second;
    }
    out += "\n";
    return out;
}

SupportFamily family_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail("parse", std::string("bad family JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("C")) fail("parse", "family JSON needs 'n' and 'C'");
    int n = j["n"].get<int>();
    std::vector<IndexSet> sets;
    for (const auto& arr : j["C"]) sets.push_back(IndexSet(arr.get<std::vector<int>>()));
    if (j.contains("indices"))
        return SupportFamily(n, j["indices"].get<std::vector<int>>(), std::move(sets));
    return SupportFamily(n, std::move(sets));
}

SupportFamily read_family_file(const std::string& path) { return family_from_json(slurp(path)); }

std::string family_to_json(const SupportFamily& family) {
    nlohmann::json j;
    j["n"] = family.n;
    if (!family.full()) j["indices"] = family.indices;
    j["C"] = nlohmann::json::array();
    for (const IndexSet& s : family.sets) j["C"].push_back(s.values());
    return j.dump();
}

std::string poset_to_dot(const Poset& poset) {
    std::ostringstream out;
    out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (const std::string& e : poset.elements()) out << "  \"" << e << "\";\n";
    for (const auto& [a, b] : poset.covers()) out << "  \"" << a << "\" -> \"" << b << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace suppos
