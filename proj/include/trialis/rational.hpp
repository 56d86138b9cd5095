// Exact rational scalars (GMP backed).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trialis {

using Q = mpq_class;
using Z = mpz_class;

// "p/q", or "p" when q == 1
std::string to_string(const Q& x);
Q parse_rational(std::string_view s);

inline Q qfrac(long p, long q = 1) {
    Q r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Q& x) { return sgn(x) == 0; }
inline bool is_integer(const Q& x) { return x.get_den() == 1; }

Z lcm_denominators(const std::vector<Q>& xs);

// binomial with rational top: (x+1)...(x+k)/k!
Q binom_poly(const Q& x, long k);
// ordinary binomial C(n,k), 0 outside range
Z binom(long n, long k);

}  // namespace trialis
