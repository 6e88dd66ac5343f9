#pragma once

#include <gmpxx.h>

#include <string>

namespace kroncoeff {

using BigInt = mpz_class;   // signed, arbitrary precision
using BigCount = mpz_class; // nonnegative by convention

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline BigInt factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace kroncoeff
