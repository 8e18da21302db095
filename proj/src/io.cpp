#include "m0n/io.hpp"

#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "m0n/errors.hpp"

namespace m0n {

using json = nlohmann::ordered_json;

std::string label_name(int l) {
    if (l == 10) return "a";
    if (l == 11) return "b";
    if (l == 12) return "c";
    return std::to_string(l);
}

namespace {

int label_from_token(const std::string& tok, int n) {
    if (tok == "a") return 10;
    if (tok == "b") return 11;
    if (tok == "c") return 12;
    int v = 0;
    for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("bad label token: " + tok);
        v = v * 10 + (ch - '0');
    }
    if (v < 1 || v > n) throw ParseError("label out of range: " + tok);
    return v;
}

}  // namespace

mask_t parse_label_set(const std::string& s, int n) {
    mask_t m = 0;
    std::string tok;
    bool has_sep = s.find(',') != std::string::npos || s.find(' ') != std::string::npos;
    if (has_sep) {
        std::string cur;
        for (char ch : s + ",") {
            if (ch == ',' || ch == ' ') {
                if (!cur.empty()) {
                    int l = label_from_token(cur, n);
                    mask_t b = 1u << (l - 1);
                    if (m & b) throw ParseError("repeated label in set: " + s);
                    m |= b;
                    cur.clear();
                }
            } else {
                cur += ch;
            }
        }
    } else {
        for (char ch : s) {
            int l;
            if (ch >= '1' && ch <= '9') l = ch - '0';
            else if (ch == 'a') l = 10;
            else if (ch == 'b') l = 11;
            else if (ch == 'c') l = 12;
            else throw ParseError("bad label character in: " + s);
            if (l > n) throw ParseError("label out of range in: " + s);
            mask_t b = 1u << (l - 1);
            if (m & b) throw ParseError("repeated label in set: " + s);
            m |= b;
        }
    }
    if (!m) throw ParseError("empty label set");
    return m;
}

std::string label_set_string(mask_t m) {
    std::string out;
    bool first = true;
    while (m) {
        int l = std::countr_zero(m) + 1;
        m &= m - 1;
        if (!first) out += ",";
        out += label_name(l);
        first = false;
    }
    return out;
}

std::string fcurve_text(const FCurve& f) {
    std::string out = "F{";
    for (int i = 0; i < 4; ++i) {
        if (i) out += "|";
        out += label_set_string(f.b[i]);
    }
    return out + "}";
}

FCurve fcurve_from_text(const std::string& s, int n) {
    size_t lo = s.find('{'), hi = s.rfind('}');
    if (lo == std::string::npos || hi == std::string::npos || hi < lo)
        throw ParseError("expected F{...}: " + s);
    std::string body = s.substr(lo + 1, hi - lo - 1);
    char sep = body.find('|') != std::string::npos ? '|' : ',';
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : body + sep) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (parts.size() != 4) throw ParseError("an F-curve needs four blocks: " + s);
    std::array<mask_t, 4> blocks;
    for (int i = 0; i < 4; ++i) blocks[i] = parse_label_set(parts[i], n);
    return make_fcurve(blocks, n);
}

std::string expression_text(const Expression& e) {
    if (e.empty()) return "0\n";
    std::string out;
    for (const auto& [f, c] : e) {
        out += (c < 0 ? "-" : "+");
        long long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + " ";
        else out += " ";
        out += fcurve_text(f);
        out += "\n";
    }
    return out;
}

std::string type_text(const std::vector<mask_t>& type) {
    std::string out;
    for (size_t i = 0; i < type.size(); ++i) {
        if (i) out += "|";
        mask_t m = type[i];
        while (m) {
            int l = std::countr_zero(m) + 1;
            m &= m - 1;
            out += label_name(l);
        }
    }
    return out;
}

namespace {

json blocks_to_json(const FCurve& f) {
    json blocks = json::array();
    for (mask_t b : f.b) {
        json lb = json::array();
        mask_t m = b;
        while (m) {
            lb.push_back(std::countr_zero(m) + 1);
            m &= m - 1;
        }
        blocks.push_back(lb);
    }
    return blocks;
}

mask_t mask_from_json(const json& arr, int n) {
    mask_t m = 0;
    for (const auto& v : arr) {
        int l = v.get<int>();
        if (l < 1 || l > n) throw ParseError("label out of range in JSON");
        m |= 1u << (l - 1);
    }
    return m;
}

json mask_to_json(mask_t m) {
    json arr = json::array();
    while (m) {
        arr.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return arr;
}

}  // namespace

std::string expression_json(const Expression& e, int n) {
    json j;
    j["n"] = n;
    j["terms"] = json::array();
    for (const auto& [f, c] : e) {
        json t;
        t["blocks"] = blocks_to_json(f);
        t["coeff"] = c;
        j["terms"].push_back(t);
    }
    return j.dump(2);
}

std::pair<Expression, int> expression_from_json(const std::string& s) {
    json j = json::parse(s);
    int n = j.at("n").get<int>();
    Expression e;
    for (const auto& t : j.at("terms")) {
        const auto& bl = t.at("blocks");
        if (bl.size() != 4) throw ParseError("an F-curve needs four blocks");
        std::array<mask_t, 4> blocks;
        for (int i = 0; i < 4; ++i) blocks[i] = mask_from_json(bl[i], n);
        expr_add(e, make_fcurve(blocks, n), t.at("coeff").get<long long>());
    }
    return {e, n};
}

std::string curve_class_json(const CurveClass& c) {
    const auto& t = DivisorTable::get(c.n);
    json j;
    j["n"] = c.n;
    j["entries"] = json::array();
    for (size_t i = 0; i < t.divisors.size(); ++i) {
        if (c.v[i] == 0) continue;
        json e;
        e["set"] = mask_to_json(t.divisors[i]);
        e["value"] = c.v[i];
        j["entries"].push_back(e);
    }
    return j.dump(2);
}

CurveClass curve_class_from_json(const std::string& s) {
    json j = json::parse(s);
    int n = j.at("n").get<int>();
    CurveClass c = zero_class(n);
    for (const auto& e : j.at("entries")) {
        mask_t m = mask_from_json(e.at("set"), n);
        c.v[divisor_index(m, n)] = e.at("value").get<long long>();
    }
    return c;
}

std::string cycle_json(const CycleData& c) {
    json j;
    j["n"] = c.n;
    j["heavy"] = {c.h0, c.hinf};
    j["components"] = json::array();
    for (const auto& tc : c.components) {
        json e;
        e["type"] = json::array();
        for (mask_t b : tc.type) e["type"].push_back(mask_to_json(b));
        e["multiplicity"] = tc.mult;
        j["components"].push_back(e);
    }
    return j.dump(2);
}

CycleData cycle_from_json(const std::string& s) {
    json j = json::parse(s);
    CycleData c;
    c.n = j.at("n").get<int>();
    c.h0 = j.at("heavy").at(0).get<int>();
    c.hinf = j.at("heavy").at(1).get<int>();
    for (const auto& e : j.at("components")) {
        TypeCount tc;
        for (const auto& b : e.at("type")) tc.type.push_back(mask_from_json(b, c.n));
        tc.mult = e.at("multiplicity").get<long long>();
        c.components.push_back(std::move(tc));
    }
    return c;
}

namespace {

Rat rat_from_string(const std::string& s) {
    return Rat(s);
}

json cyclo_to_json(const Cyclo& c, int deg) {
    json arr = json::array();
    std::vector<Rat> v = c.coeffs();
    v.resize(std::max<size_t>(deg, v.size()), Rat(0));
    for (const auto& r : v) {
        std::ostringstream os;
        os << r;
        arr.push_back(os.str());
    }
    return arr;
}

CPoly cpoly_from_json(const json& arr, const CycloField& f) {
    CPoly p;
    for (const auto& coef : arr) {
        std::vector<Rat> c;
        for (const auto& s : coef) c.push_back(rat_from_string(s.get<std::string>()));
        p.push_back(Cyclo(f, std::move(c)));
    }
    return cp_trim(std::move(p));
}

json cpoly_to_json(const CPoly& p, int deg) {
    json arr = json::array();
    for (const auto& c : p) arr.push_back(cyclo_to_json(c, deg));
    return arr;
}

}  // namespace

std::string family_json(const LmFamily& f, int zeta_order) {
    const auto& fld = CycloField::get(zeta_order);
    json j;
    j["n"] = f.n;
    j["m"] = zeta_order;
    j["heavy"] = {f.heavy0, f.heavy_inf};
    j["coords"] = json::object();
    for (const auto& [l, fn] : f.coords) {
        json e;
        e["num"] = cpoly_to_json(fn.num, fld.degree());
        e["den"] = cpoly_to_json(fn.den, fld.degree());
        j["coords"][std::to_string(l)] = e;
    }
    return j.dump(2);
}

std::pair<LmFamily, int> family_from_json(const std::string& s) {
    json j = json::parse(s);
    LmFamily f;
    f.n = j.at("n").get<int>();
    f.heavy0 = j.at("heavy").at(0).get<int>();
    f.heavy_inf = j.at("heavy").at(1).get<int>();
    int m = j.at("m").get<int>();
    const auto& fld = CycloField::get(m);
    for (const auto& [key, e] : j.at("coords").items()) {
        int l = std::stoi(key);
        f.coords[l] = RatFunc(cpoly_from_json(e.at("num"), fld),
                              cpoly_from_json(e.at("den"), fld));
    }
    return {std::move(f), m};
}

std::string degeneration_json(const DegenerationResult& r, int n, int h0, int hinf) {
    json j;
    j["n"] = n;
    j["heavy"] = {h0, hinf};
    j["steps"] = json::array();
    for (size_t i = 0; i < r.steps.size(); ++i) {
        json st;
        st["label"] = r.steps[i];
        st["cycle"] = json::array();
        for (const auto& tc : r.snapshots[i]) {
            json e;
            e["type"] = json::array();
            for (mask_t b : tc.type) e["type"].push_back(mask_to_json(b));
            e["multiplicity"] = tc.mult;
            st["cycle"].push_back(e);
        }
        j["steps"].push_back(st);
    }
    j["final"] = json::array();
    for (const auto& tc : r.final_cycle) {
        json e;
        e["type"] = json::array();
        for (mask_t b : tc.type) e["type"].push_back(mask_to_json(b));
        e["multiplicity"] = tc.mult;
        j["final"].push_back(e);
    }
    j["dropped"] = r.dropped;
    return j.dump(2);
}

std::string search_result_json(const SearchResult& r, int n) {
    json j;
    switch (r.status) {
        case SearchStatus::found: j["status"] = "found"; break;
        case SearchStatus::budget_exhausted: j["status"] = "budget_exhausted"; break;
        case SearchStatus::not_found: j["status"] = "not_found"; break;
    }
    j["deficiency"] = r.deficiency;
    j["nodes"] = r.nodes;
    j["restarts"] = r.restarts;
    j["level_reached"] = r.level_reached;
    j["expression"] = json::parse(expression_json(r.expression, n));
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

}
