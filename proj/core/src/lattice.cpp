#include "gwzero/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace gwzero {

std::string to_string(const Z& z)
{
    return z.get_str();
}

const char* to_string(Parity p)
{
    return p == Parity::Even ? "even" : "odd";
}

bool Class2::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](i64 c) { return c == 0; });
}

BilinearLattice::BilinearLattice(IMat gram, std::vector<std::string> basis_labels)
    : gram_(std::move(gram)), labels_(std::move(basis_labels))
{
    const std::size_t n = gram_.size();
    for (const auto& row : gram_)
        if (row.size() != n)
            throw ValidationError("gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw ValidationError("gram matrix is not symmetric");
    if (labels_.size() != n)
        throw ValidationError("basis label count does not match rank");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n)
        throw LabelError("basis labels are not pairwise distinct");
}

Z pair(const BilinearLattice& L, const Class2& a, const Class2& b)
{
    const auto n = static_cast<std::size_t>(L.rank());
    if (a.coords.size() != n || b.coords.size() != n)
        throw DimensionError("class coordinate length does not match lattice rank");
    Z acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords[i] == 0)
            continue;
        Z row = 0;
        for (std::size_t j = 0; j < n; ++j)
            row += Z(L.gram()[i][j]) * Z(b.coords[j]);
        acc += Z(a.coords[i]) * row;
    }
    return acc;
}

Z determinant(const BilinearLattice& L)
{
    const int n = L.rank();
    if (n == 0)
        return 1;
    ZMat m(n, std::vector<Z>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = L.gram()[i][j];

    // Bareiss fraction-free elimination.
    int sign = 1;
    Z prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Z num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

bool is_unimodular(const BilinearLattice& L)
{
    Z d = determinant(L);
    return d == 1 || d == -1;
}

Signature signature(const BilinearLattice& L)
{
    const int n = L.rank();
    std::vector<std::vector<Q>> m(n, std::vector<Q>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = Q(L.gram()[i][j]);

    Signature sig;
    for (int i = 0; i < n; ++i) {
        if (m[i][i] == 0) {
            int j = i + 1;
            while (j < n && m[j][j] == 0)
                ++j;
            if (j < n) {
                // symmetric basis swap e_i <-> e_j
                std::swap(m[i], m[j]);
                for (int r = 0; r < n; ++r)
                    std::swap(m[r][i], m[r][j]);
            } else {
                j = i + 1;
                while (j < n && m[i][j] == 0)
                    ++j;
                if (j == n)
                    throw DegenerateFormError("form is degenerate (det = 0)");
                // e_i -> e_i + e_j; the new diagonal is 2*m[i][j] since all
                // remaining diagonal entries vanish here
                for (int c = 0; c < n; ++c)
                    m[i][c] += m[j][c];
                for (int r = 0; r < n; ++r)
                    m[r][i] += m[r][j];
            }
        }
        const Q p = m[i][i];
        // Snapshot the pivot row: the in-place update below zeroes m[i][r]
        // as it goes, and later rows still need the original values.
        const std::vector<Q> pivot_row(m[i].begin(), m[i].end());
        for (int r = i + 1; r < n; ++r) {
            if (m[r][i] == 0)
                continue;
            const Q f = m[r][i] / p;
            for (int c = i + 1; c < n; ++c)
                m[r][c] -= f * pivot_row[c];
            m[r][i] = 0;
            m[i][r] = 0;
        }
        if (p > 0)
            ++sig.plus;
        else
            ++sig.minus;
    }
    return sig;
}

Parity parity(const BilinearLattice& L)
{
    for (int i = 0; i < L.rank(); ++i)
        if (L.entry(i, i) % 2 != 0)
            return Parity::Odd;
    return Parity::Even;
}

bool is_primitive(const Class2& a)
{
    if (a.is_zero())
        throw ZeroClassError("primitivity is undefined for the zero class");
    i64 g = 0;
    for (i64 c : a.coords)
        g = std::gcd(g, c);
    return g == 1;
}

BilinearLattice direct_sum(const BilinearLattice& a, const BilinearLattice& b)
{
    const int na = a.rank();
    const int nb = b.rank();
    IMat gram(na + nb, IVec(na + nb, 0));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            gram[i][j] = a.gram()[i][j];
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            gram[na + i][na + j] = b.gram()[i][j];

    std::vector<std::string> labels = a.basis_labels();
    std::set<std::string> used(labels.begin(), labels.end());
    for (const std::string& l : b.basis_labels()) {
        std::string candidate = l;
        for (int suffix = 2; used.count(candidate); ++suffix)
            candidate = l + "_" + std::to_string(suffix);
        used.insert(candidate);
        labels.push_back(candidate);
    }
    return BilinearLattice(std::move(gram), std::move(labels));
}

ZMat inverse_unimodular(const BilinearLattice& L)
{
    const int n = L.rank();
    std::vector<std::vector<Q>> m(n, std::vector<Q>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[i][j] = Q(L.gram()[i][j]);
        m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw DegenerateFormError("form is singular; no inverse");
        std::swap(m[col], m[piv]);
        const Q p = m[col][col];
        for (int c = 0; c < 2 * n; ++c)
            m[col][c] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            const Q f = m[r][col];
            for (int c = 0; c < 2 * n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    ZMat inv(n, std::vector<Z>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Q v = m[i][n + j];
            v.canonicalize();
            if (v.get_den() != 1)
                throw ValidationError("inverse gram is not integral; form is not unimodular");
            inv[i][j] = v.get_num();
        }
    return inv;
}

IVec pairing_functional(const BilinearLattice& L, const Class2& a)
{
    const auto n = static_cast<std::size_t>(L.rank());
    if (a.coords.size() != n)
        throw DimensionError("class coordinate length does not match lattice rank");
    IVec out(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        Z acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            acc += Z(L.gram()[i][j]) * Z(a.coords[i]);
        if (!fits_i64(acc))
            throw Error("pairing functional entry overflows 64 bits");
        out[j] = static_cast<i64>(acc.get_si());
    }
    return out;
}

BilinearLattice lattice_one()
{
    return BilinearLattice({{1}}, {"p"});
}

BilinearLattice lattice_minus_one()
{
    return BilinearLattice({{-1}}, {"n"});
}

BilinearLattice lattice_hyperbolic()
{
    return BilinearLattice({{0, 1}, {1, 0}}, {"u", "v"});
}

BilinearLattice lattice_e8_minus()
{
    // Negated E8 Cartan matrix, nodes numbered along the long chain
    // 1-3-4-5-6-7-8 with 2 attached to 4.
    const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    IMat gram(8, IVec(8, 0));
    for (int i = 0; i < 8; ++i)
        gram[i][i] = -2;
    for (const auto& e : edges) {
        gram[e[0] - 1][e[1] - 1] = 1;
        gram[e[1] - 1][e[0] - 1] = 1;
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= 8; ++i)
        labels.push_back("a" + std::to_string(i));
    return BilinearLattice(std::move(gram), std::move(labels));
}

BilinearLattice named_form(const std::string& name)
{
    if (name == "<1>")
        return lattice_one();
    if (name == "<-1>")
        return lattice_minus_one();
    if (name == "H")
        return lattice_hyperbolic();
    if (name == "E8-")
        return lattice_e8_minus();
    throw ManifestError("unknown named form: '" + name + "'");
}

}  // namespace gwzero
