#pragma once

#include <string>
#include <vector>

#include "gwzero/errors.hpp"
#include "gwzero/numeric.hpp"

namespace gwzero {

/// Integer second homology class, written in the basis of an ambient lattice.
/// The zero vector is a valid class (the zero class).
struct Class2 {
    IVec coords;

    bool is_zero() const;
    friend bool operator==(const Class2&, const Class2&) = default;
};

enum class Parity { Even, Odd };

struct Signature {
    int plus = 0;
    int minus = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend Signature operator+(const Signature& a, const Signature& b)
    {
        return {a.plus + b.plus, a.minus + b.minus};
    }
};

/// Symmetric integer bilinear form with labeled basis. Immutable after
/// construction; rank 0 is allowed and acts as the neutral element for
/// direct sums.
class BilinearLattice {
public:
    BilinearLattice() = default;
    BilinearLattice(IMat gram, std::vector<std::string> basis_labels);

    int rank() const { return static_cast<int>(gram_.size()); }
    const IMat& gram() const { return gram_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    i64 entry(int i, int j) const { return gram_[i][j]; }

private:
    IMat gram_;
    std::vector<std::string> labels_;
};

/// a^T * gram * b. Throws DimensionError on length mismatch.
Z pair(const BilinearLattice& L, const Class2& a, const Class2& b);

/// Inertia indices (b_plus, b_minus) by exact rational symmetric
/// diagonalization. Throws DegenerateFormError when det = 0.
Signature signature(const BilinearLattice& L);

/// Exact determinant by fraction-free (Bareiss) elimination.
Z determinant(const BilinearLattice& L);

bool is_unimodular(const BilinearLattice& L);

/// Even iff every diagonal Gram entry is even.
Parity parity(const BilinearLattice& L);

/// True iff gcd of the coordinates is 1. Throws ZeroClassError on the zero
/// class.
bool is_primitive(const Class2& a);

/// Block-diagonal sum. Colliding labels from the right summand are
/// deterministically suffixed (_2, _3, ...).
BilinearLattice direct_sum(const BilinearLattice& a, const BilinearLattice& b);

/// Exact inverse Gram matrix; integral whenever |det| = 1.
/// Throws DegenerateFormError if singular, ValidationError if non-integral.
ZMat inverse_unimodular(const BilinearLattice& L);

/// The functional x -> pair(a, x) as the coefficient vector gram * a.
IVec pairing_functional(const BilinearLattice& L, const Class2& a);

// Named forms: <1>, <-1>, the hyperbolic plane H, and E8 in the
// negative-definite convention.
BilinearLattice lattice_one();
BilinearLattice lattice_minus_one();
BilinearLattice lattice_hyperbolic();
BilinearLattice lattice_e8_minus();

/// Resolve one of the catalog names "<1>", "<-1>", "H", "E8-".
/// Throws ManifestError on anything else.
BilinearLattice named_form(const std::string& name);

const char* to_string(Parity p);

}  // namespace gwzero
