#ifndef COBINV_BIGINT_HPP
#define COBINV_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cobinv {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& n) { return n.str(); }

// gcd(a,b) = x*a + y*b, gcd >= 0
inline BigInt xgcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b;
    BigInt old_x = 1, xx = 0;
    BigInt old_y = 0, yy = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x; y = old_y;
    return old_r;
}

// 2-adic valuation; returns -1 for n == 0 (infinite)
inline int valuation2(BigInt n) {
    if (n == 0) return -1;
    int v = 0;
    while ((n & 1) == 0) { n >>= 1; ++v; }
    return v;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline BigInt pow2(int k) {
    BigInt r = 1;
    return r << k;
}

}  // namespace cobinv

#endif
