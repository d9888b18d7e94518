#include "shylab/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "shylab/errors.hpp"

namespace shylab {

long long rat_floor(const Rat& x) {
    long long q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
    return q;
}

long long rat_ceil(const Rat& x) {
    long long q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() > 0) ++q;
    return q;
}

namespace {

long long parse_ll(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer in rational literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("sign without digits in rational literal");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad rational literal: '" + s + "'");
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size())
        throw ParseError("rational literal out of range: '" + s + "'");
    return v;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_ll(text));
    long long num = parse_ll(text.substr(0, slash));
    long long den = parse_ll(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
    return Rat(num, den);
}

std::string rat_to_string(const Rat& x) {
    std::string s = std::to_string(x.numerator());
    if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
    return s;
}

}  // namespace shylab
