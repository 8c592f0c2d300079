#pragma once

#include <complex>
#include <vector>

#include "harmconv/errors.hpp"
#include "harmconv/power_series.hpp"

namespace harmconv {

// Coefficient threshold below which a stored entry does not count toward the degree.
inline constexpr double kDegreeStripTol = 1e-14;

// Polynomial over C, coeffs[k] = coefficient of z^k. Trailing near-zero entries
// may be stored; degree() reports the stripped degree.
class Polynomial {
public:
    Polynomial() : coeffs_{Cx{0.0, 0.0}} {}
    explicit Polynomial(std::vector<Cx> coeffs);

    int degree() const;
    Cx coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<size_t>(k)] : Cx{0.0, 0.0};
    }
    const std::vector<Cx>& coeffs() const { return coeffs_; }
    Cx leading() const { return coeff(degree()); }
    bool is_zero() const;

    Polynomial stripped() const; // drop trailing entries with modulus < kDegreeStripTol

    static Polynomial monomial(Cx c, int power);

private:
    std::vector<Cx> coeffs_;
};

Cx eval(const Polynomial& p, Cx z);
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, Cx c);
Polynomial derivative(const Polynomial& p);
Polynomial shift_up(const Polynomial& p, int m); // multiply by z^m

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(Cx c, const Polynomial& p) { return scale(p, c); }

// Synthetic division by (z - root); the remainder is discarded.
Polynomial deflate(const Polynomial& p, Cx root);

// Star adjoint z^d conj(p(1/conj(z))): coefficient k of the result is conj(coeff d-k).
Polynomial star(const Polynomial& p);

struct RootSet {
    std::vector<Cx> roots;
    double residual = 0.0; // max |p_monic(root)|
};

// All roots with multiplicity. Degrees 1 and 2 use closed formulas (stable branch);
// higher degrees use Durand-Kerner with seeds (0.4+0.9i)^k, k = 1..degree.
RootSet roots_of(const Polynomial& p);

// Cohn reduction (p - p(0) p*)/z for monic p with |p(0)| < 1.
Polynomial cohn_reduce(const Polynomial& p);

struct DiskLocation {
    bool all_inside = false;  // every root has modulus <= 1 + 1e-9
    int count_inside = 0;
};

// Root location for the closed unit disk: recursive Cohn reduction where its
// hypothesis is comfortably satisfied, the root oracle otherwise; counts always
// come from the roots.
DiskLocation zeros_in_closed_disk(const Polynomial& p);

} // namespace harmconv
