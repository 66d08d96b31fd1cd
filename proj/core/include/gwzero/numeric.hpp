#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace gwzero {

// Inputs (coordinates, Gram entries, functionals) are bounded machine
// integers; everything derived from them (pairings, determinants, invariant
// values) is computed in exact arbitrary precision.
using i64 = std::int64_t;
using Z = mpz_class;
using Q = mpq_class;

using IVec = std::vector<i64>;
using IMat = std::vector<std::vector<i64>>;
using ZMat = std::vector<std::vector<Z>>;

inline Z dot(const IVec& a, const IVec& b)
{
    Z acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += Z(a[i]) * Z(b[i]);
    return acc;
}

inline bool fits_i64(const Z& z)
{
    return z.fits_slong_p();
}

std::string to_string(const Z& z);

}  // namespace gwzero
