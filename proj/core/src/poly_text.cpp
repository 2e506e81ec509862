// Text format for polynomials: terms "c*t^k" joined by +/-, highest degree
// first, e.g. "-t + 3 - t^-1" or "-5*s + 1". The parser also tolerates missing
// '*' and arbitrary spacing, so printed output always round-trips.
#include <cctype>
#include <map>

#include "equiknot/error.hpp"
#include "equiknot/polynomial.hpp"

namespace equiknot {

namespace {

void print_term(std::string& out, const Rat& c, int k, char var, bool first) {
    Rat a = abs(c);
    if (first)
        out += (sgn(c) < 0) ? "-" : "";
    else
        out += (sgn(c) < 0) ? " - " : " + ";
    if (k == 0) {
        out += rat_str(a);
        return;
    }
    if (a != 1) {
        out += rat_str(a);
        out += '*';
    }
    out += var;
    if (k != 1) {
        out += '^';
        out += std::to_string(k);
    }
}

std::string print_terms(const std::map<int, Rat, std::greater<int>>& terms, char var) {
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (sgn(c) == 0)
            continue;
        print_term(out, c, k, var, first);
        first = false;
    }
    if (first)
        out = "0";
    return out;
}

std::map<int, Rat> parse_terms(const std::string& text, char var) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    require(!s.empty(), "InvalidInput", "empty polynomial text");
    std::map<int, Rat> terms;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-')
                sign = -sign;
            ++i;
        }
        require(i < s.size(), "InvalidInput", "dangling sign in '" + text + "'");
        // term body: up to the next top-level +/- (minus after '^' binds to the exponent)
        size_t start = i;
        while (i < s.size()) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^')
                break;
            ++i;
        }
        std::string term = s.substr(start, i - start);
        size_t vpos = term.find(var);
        Rat coeff(1);
        int exp = 0;
        if (vpos == std::string::npos) {
            coeff = rat_parse(term);
        } else {
            std::string head = term.substr(0, vpos);
            if (!head.empty() && head.back() == '*')
                head.pop_back();
            if (!head.empty())
                coeff = rat_parse(head);
            std::string tail = term.substr(vpos + 1);
            if (tail.empty()) {
                exp = 1;
            } else {
                require(tail[0] == '^', "InvalidInput", "bad term '" + term + "'");
                std::string e = tail.substr(1);
                require(!e.empty(), "InvalidInput", "missing exponent in '" + term + "'");
                size_t pos = 0;
                try {
                    exp = std::stoi(e, &pos);
                } catch (...) {
                    fail("InvalidInput", "bad exponent in '" + term + "'");
                }
                require(pos == e.size(), "InvalidInput", "bad exponent in '" + term + "'");
            }
        }
        Rat& slot = terms[exp];
        slot += coeff * sign;
    }
    return terms;
}

} // namespace

std::string poly_text(const RatPoly& p, char var) {
    std::map<int, Rat, std::greater<int>> terms;
    for (int k = 0; k <= p.degree(); ++k)
        terms[k] = p.coeff(k);
    return print_terms(terms, var);
}

std::string poly_text(const LaurentPoly& p, char var) {
    std::map<int, Rat, std::greater<int>> terms;
    if (!p.is_zero())
        for (int k = p.min_deg(); k <= p.max_deg(); ++k)
            terms[k] = p.coeff(k);
    return print_terms(terms, var);
}

RatPoly parse_poly_text(const std::string& s, char var) {
    auto terms = parse_terms(s, var);
    RatPoly out;
    for (const auto& [k, c] : terms) {
        require(k >= 0, "InvalidInput", "negative exponent in ordinary polynomial");
        out = out + RatPoly::monomial(c, k);
    }
    return out;
}

LaurentPoly parse_laurent_text(const std::string& s, char var) {
    auto terms = parse_terms(s, var);
    LaurentPoly out;
    for (const auto& [k, c] : terms)
        out = out + LaurentPoly::monomial(c, k);
    return out;
}

} // namespace equiknot
