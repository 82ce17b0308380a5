#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace anmod {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long k) {
    if (k < 0) throw std::invalid_argument("factorial of negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

// Binomial coefficient extended to all integer upper arguments:
// 0 for k < 0, otherwise x(x-1)...(x-k+1)/k!.
inline Int extended_binom(const Int& x, long k) {
    if (k < 0) return Int(0);
    Int num(1);
    Int t(x);
    for (long i = 0; i < k; ++i) {
        num *= t;
        t -= 1;
    }
    Rat q(num);
    q /= Rat(factorial(k));
    q.canonicalize();
    if (q.get_den() != 1)
        throw std::logic_error("extended_binom produced a non-integer");
    return q.get_num();
}

inline Int extended_binom(long x, long k) { return extended_binom(Int(x), k); }

struct PCoeffLog {
    long out_of_domain = 0;
};

// p(a,b,c,d) = extended_binom(a+c-b, a-d).  The stated domain is d <= b;
// calls outside it still evaluate the formula but are counted.
inline Int p_coeff(long a, long b, long c, long d, PCoeffLog* log = nullptr) {
    if (log && d > b) log->out_of_domain += 1;
    return extended_binom(Int(a) + c - b, a - d);
}

}  // namespace anmod
