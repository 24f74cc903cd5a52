#include "symchow/rational.hpp"

#include <cctype>
#include <ostream>

namespace symchow {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '-' || s[i] == '+') {
        neg = (s[i] == '-');
        ++i;
    }
    auto read_digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("Rational::parse: bad number '" + s + "'");
        return s.substr(start, pos - start);
    };
    std::string num = read_digits(i);
    std::string den = "1";
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = read_digits(i);
    }
    if (i != s.size()) throw std::invalid_argument("Rational::parse: trailing junk in '" + s + "'");
    mpz_class n(num), d(den);
    mpq_class v(n, d);
    if (v.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    v.canonicalize();
    if (neg) v = -v;
    return Rational(v);
}

std::string Rational::str() const {
    if (is_integer()) return num_str();
    return num_str() + "/" + den_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace symchow
