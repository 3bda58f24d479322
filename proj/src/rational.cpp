#include "lcf/rational.hpp"

#include <limits>

namespace lcf {

Rational Rational::from128(__int128 n, __int128 d) {
    if (d == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    constexpr auto lim = std::numeric_limits<std::int64_t>::max();
    if (n > lim || n < -lim || d > lim) {
        throw std::overflow_error("Rational: value does not fit in 64 bits");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational Rational::parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            const auto n = std::stoll(s, &pos);
            if (pos != s.size()) {
                throw std::invalid_argument(s);
            }
            return {n};
        }
        std::size_t p1 = 0;
        std::size_t p2 = 0;
        const std::string a = s.substr(0, slash);
        const std::string b = s.substr(slash + 1);
        const auto n = std::stoll(a, &p1);
        const auto d = std::stoll(b, &p2);
        if (p1 != a.size() || p2 != b.size()) {
            throw std::invalid_argument(s);
        }
        return {n, d};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("Rational::parse: cannot parse '" + s + "'");
    }
}

}  // namespace lcf
