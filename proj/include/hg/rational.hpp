#ifndef HG_RATIONAL_HPP
#define HG_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace hg {

using Rat = boost::multiprecision::mpq_rational;
using Bigint = boost::multiprecision::mpz_int;

inline Bigint numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Bigint denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat pow_rat(const Rat& base, long e) {
    Rat r(1);
    Rat b = e >= 0 ? base : Rat(1) / base;
    for (long i = 0, n = e >= 0 ? e : -e; i < n; ++i) r *= b;
    return r;
}

/// Scales a rational vector to coprime integer entries. The sign is fixed so
/// that the first nonzero entry is positive; the zero vector is returned as is.
inline std::vector<Rat> integer_normalize(const std::vector<Rat>& v) {
    Bigint den_lcm = 1;
    for (const Rat& q : v) den_lcm = lcm(den_lcm, denominator(q));
    Bigint num_gcd = 0;
    for (const Rat& q : v) num_gcd = gcd(num_gcd, Bigint(numerator(q) * (den_lcm / denominator(q))));
    if (num_gcd == 0) return v;
    std::vector<Rat> out(v.size());
    Rat scale(den_lcm, num_gcd);
    int lead = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i] * scale;
        if (lead == 0 && out[i] != 0) lead = out[i] > 0 ? 1 : -1;
    }
    if (lead < 0)
        for (Rat& q : out) q = -q;
    return out;
}

inline std::string rat_str(const Rat& q) { return q.str(); }

} // namespace hg

#endif
