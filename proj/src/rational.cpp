#include "horikawa/rational.hpp"
#include "horikawa/errors.hpp"

namespace horikawa {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw DivisionByZero("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    auto valid_int = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+'))
            ++i;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw ParseError("bad rational literal '" + text + "'");
    if (!num.empty() && num[0] == '+')
        num.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0)
        throw DivisionByZero("zero denominator in '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace horikawa
