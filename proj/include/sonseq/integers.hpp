#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sonseq {

// All lattice arithmetic is exact; coordinates are arbitrary-size integers.
using Int = boost::multiprecision::cpp_int;

inline bool is_even(const Int& n) { return n % 2 == 0; }

// Extended gcd: returns g = gcd(a, b) >= 0 and (s, t) with s*a + t*b = g.
struct ExtGcd {
    Int g;
    Int s;
    Int t;
};

inline ExtGcd ext_gcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b;
        b = r;
        Int s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    return {a, s0, t0};
}

} // namespace sonseq
