#include "bisum/print.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace bisum {

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r.raw().get_num();
    if (!r.is_integer()) os << "/" << r.raw().get_den();
    return os.str();
}

namespace {

// one monomial: sign handled by caller via `lead`; c != 0
void append_term(std::string& out, const Rat& c, const std::string& vars, bool lead) {
    const Rat a = c.abs();
    if (!lead) out += (c.sign() < 0) ? "-" : "+";
    else if (c.sign() < 0) out += "-";
    if (vars.empty()) {
        out += to_string(a);
        return;
    }
    if (!a.is_one()) {
        out += to_string(a);
        out += "*";
    }
    out += vars;
}

std::string power_str(std::string_view var, int e) {
    std::string s;
    if (e == 0) return s;
    s += var;
    if (e > 1) {
        s += "^";
        s += std::to_string(e);
    }
    return s;
}

}  // namespace

std::string to_string(const UPoly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool lead = true;
    for (int i = p.deg(); i >= 0; --i) {
        const Rat c = p.coeff(i);
        if (c.is_zero()) continue;
        append_term(out, c, power_str(var, i), lead);
        lead = false;
    }
    return out;
}

std::string to_string(const PolyFrac& f, std::string_view var) {
    if (f.den() == UPoly(Rat(1))) return to_string(f.num(), var);
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

std::string to_string(const BPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<std::pair<int, int>, Rat>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });
    std::string out;
    bool lead = true;
    for (const auto& [m, c] : ts) {
        std::string vars = power_str("x", m.first);
        const std::string ys = power_str("y", m.second);
        if (!vars.empty() && !ys.empty()) vars += "*";
        vars += ys;
        append_term(out, c, vars, lead);
        lead = false;
    }
    return out;
}

std::string to_string(const RatFunc& f) {
    if (f.den() == BPoly(Rat(1))) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::string to_string(const FPoly& p, std::string_view mainvar, std::string_view coeffvar) {
    if (p.is_zero()) return "0";
    std::string out;
    bool lead = true;
    for (int i = p.deg(); i >= 0; --i) {
        const PolyFrac c = p.coeff(i);
        if (c.is_zero()) continue;
        const std::string vars = power_str(mainvar, i);
        if (c.is_constant()) {
            append_term(out, c.as_rat(), vars, lead);
        } else {
            if (!lead) out += "+";
            out += "(" + to_string(c, coeffvar) + ")";
            if (!vars.empty()) {
                out += "*";
                out += vars;
            }
        }
        lead = false;
    }
    return out;
}

}  // namespace bisum
