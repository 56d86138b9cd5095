#include "trialis/rational.hpp"

#include <cctype>

namespace trialis {

std::string to_string(const Q& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Q parse_rational(std::string_view s) {
    std::string t(s);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    std::size_t b = 0;
    while (b < t.size() && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
    t = t.substr(b);
    if (t.empty()) throw std::invalid_argument("empty rational");
    auto slash = t.find('/');
    auto valid_int = [](const std::string& u) {
        std::size_t i = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
        if (i >= u.size()) return false;
        for (; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num = num.substr(1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: " + t);
    Z p(num), q(den);
    if (q == 0) throw std::invalid_argument("zero denominator: " + t);
    Q r(p, q);
    r.canonicalize();
    return r;
}

Z lcm_denominators(const std::vector<Q>& xs) {
    Z l = 1;
    for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

Q binom_poly(const Q& x, long k) {
    if (k < 0) return 0;
    Q r = 1;
    for (long j = 1; j <= k; ++j) r *= (x + j) / Q(j);
    return r;
}

Z binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace trialis
