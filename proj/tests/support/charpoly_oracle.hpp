#pragma once

// Independent linear-algebra oracles for the lattice layer. The signature
// oracle goes through the characteristic polynomial (Faddeev-LeVerrier)
// and Descartes' rule of signs -- for a symmetric matrix all eigenvalues
// are real, so the sign-variation counts are exact -- rather than through
// the congruence diagonalization the library uses.

#include <cstdlib>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gwzero/numeric.hpp"

namespace testoracle {

// Coefficients c_1..c_n of det(xI - A) = x^n + c_1 x^{n-1} + ... + c_n.
inline std::vector<mpq_class> charpoly(const gwzero::IMat& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
    std::vector<mpq_class> c(n, 0);
    // M_1 = A; c_k = -tr(M_k)/k; M_{k+1} = A (M_k + c_k I).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    for (std::size_t k = 1; k <= n; ++k) {
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += m[i][i];
        c[k - 1] = -tr / mpq_class(static_cast<long>(k));
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) m[i][i] += c[k - 1];
        std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) next[i][j] += mpq_class(a[i][l]) * m[l][j];
            }
        m = std::move(next);
    }
    return c;
}

// (positive, negative) eigenvalue counts from the characteristic
// polynomial. Requires a symmetric input (all roots real); zero
// eigenvalues are detected from vanishing trailing coefficients.
inline std::pair<int, int> signature_oracle(const gwzero::IMat& a) {
    const int n = static_cast<int>(a.size());
    std::vector<mpq_class> full(static_cast<std::size_t>(n) + 1);
    full[0] = 1;
    const auto c = charpoly(a);
    for (int k = 1; k <= n; ++k) full[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)];

    int zeros = 0;
    while (zeros < n && full[static_cast<std::size_t>(n - zeros)] == 0) ++zeros;

    auto variations = [&](bool negate_odd) {
        int count = 0, last = 0;
        for (int k = 0; k <= n - zeros; ++k) {
            mpq_class v = full[static_cast<std::size_t>(k)];
            if (negate_odd && ((n - k) % 2 != 0)) v = -v;
            const int s = sgn(v);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    const int plus = variations(false);
    const int minus = variations(true);
    return {plus, minus};
}

// Cofactor-expansion determinant; exponential, keep n small.
inline mpz_class det_cofactor(const gwzero::IMat& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return mpz_class(a[0][0]);
    mpz_class det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (a[0][col] == 0) continue;
        gwzero::IMat minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            gwzero::IVec row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != col) row.push_back(a[i][j]);
            minor.push_back(std::move(row));
        }
        const mpz_class term = mpz_class(a[0][col]) * det_cofactor(minor);
        det += (col % 2 == 0) ? term : -term;
    }
    return det;
}

}  // namespace testoracle
