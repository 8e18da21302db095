#pragma once

#include <string>

#include "m0n/fcurve.hpp"
#include "m0n/lm.hpp"
#include "m0n/search.hpp"

namespace m0n {

std::string label_name(int l);                     // 10, 11, 12 print as a, b, c
mask_t parse_label_set(const std::string& s, int n);
std::string label_set_string(mask_t m);

// text form F{1,2|3|4|5,6}; the compact comma form F{82,1,5,34679} is also accepted
std::string fcurve_text(const FCurve& f);
FCurve fcurve_from_text(const std::string& s, int n);
std::string expression_text(const Expression& e);
std::string type_text(const std::vector<mask_t>& type);

std::string expression_json(const Expression& e, int n);
std::pair<Expression, int> expression_from_json(const std::string& s);

std::string curve_class_json(const CurveClass& c);
CurveClass curve_class_from_json(const std::string& s);

struct CycleData {
    int n = 0;
    int h0 = 0, hinf = 0;
    std::vector<TypeCount> components;
};
std::string cycle_json(const CycleData& c);
CycleData cycle_from_json(const std::string& s);

std::string family_json(const LmFamily& f, int zeta_order);
std::pair<LmFamily, int> family_from_json(const std::string& s);  // returns the field order too

std::string degeneration_json(const DegenerationResult& r, int n, int h0, int hinf);
std::string search_result_json(const SearchResult& r, int n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}
