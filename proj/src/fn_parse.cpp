#include "sharpbounds/fn_parse.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sharpbounds {

namespace {

double parse_num(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_function: empty number");
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw std::invalid_argument("parse_function: bad number '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

std::string bracketed(const std::string& s, char open, char close) {
    if (s.size() < 2 || s.front() != open || s.back() != close)
        throw std::invalid_argument("parse_function: expected " + std::string(1, open) + "..." +
                                    std::string(1, close) + " in '" + s + "'");
    return s.substr(1, s.size() - 2);
}

FunctionDescriptor parse_simple(const std::string& spec) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos) return catalog_lookup(spec);
    std::string name = spec.substr(0, colon);
    double p = parse_num(spec.substr(colon + 1));
    if (name == "pow") return catalog_lookup("pow_x_c", {p});
    if (name == "exp_base") return catalog_lookup("pow_c_x", {p});
    if (name == "leaky_relu") return catalog_lookup("leaky_relu", {p});
    throw std::invalid_argument("parse_function: unknown parametric function '" + name + "'");
}

FunctionDescriptor parse_lincomb(const std::string& body) {
    // body: [(w,f,s,t),...] optionally followed by +poly:[c0,c1,...]
    std::vector<std::string> parts = split(body, '+');
    std::vector<LinearTerm> terms;
    std::vector<double> poly;
    bool have_terms = false;
    for (const auto& part : parts) {
        if (part.rfind("poly:", 0) == 0) {
            for (const auto& c : split(bracketed(part.substr(5), '[', ']'), ','))
                poly.push_back(parse_num(c));
            continue;
        }
        have_terms = true;
        for (const auto& tup : split(bracketed(part, '[', ']'), ',')) {
            std::vector<std::string> fields = split(bracketed(tup, '(', ')'), ',');
            if (fields.size() != 4)
                throw std::invalid_argument("parse_function: term needs (w,f,s,t): '" + tup + "'");
            LinearTerm t;
            t.weight = parse_num(fields[0]);
            t.fn = parse_simple(fields[1]);
            t.arg_scale = parse_num(fields[2]);
            t.arg_shift = parse_num(fields[3]);
            terms.push_back(std::move(t));
        }
    }
    if (!have_terms) throw std::invalid_argument("parse_function: lincomb needs a term list");
    return combine_linear(std::move(terms), std::move(poly));
}

}  // namespace

FunctionDescriptor parse_function(const std::string& spec) {
    if (spec.rfind("lincomb:", 0) == 0) return parse_lincomb(spec.substr(8));
    return parse_simple(spec);
}

}  // namespace sharpbounds
