#pragma once

#include <complex>
#include <vector>

#include "harmconv/errors.hpp"

namespace harmconv {

using Cx = std::complex<double>;

inline Cx unit_phase(double angle) { return std::polar(1.0, angle); }

// Truncated Taylor series on the unit disk: coeffs[n] is the coefficient of z^n.
// Values are immutable after construction; every operation returns a new series.
class PowerSeries {
public:
    explicit PowerSeries(int order) : coeffs_(static_cast<size_t>(order) + 1, Cx{0.0, 0.0}) {}
    explicit PowerSeries(std::vector<Cx> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Cx coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<size_t>(n)] : Cx{0.0, 0.0};
    }
    const std::vector<Cx>& coeffs() const { return coeffs_; }

    PowerSeries truncated(int order) const;

    // z/(1 - e^{i gamma} z): coefficient of z^n is e^{i(n-1)gamma} for n >= 1.
    static PowerSeries geometric(double gamma, int order);
    static PowerSeries all_ones(int order); // Hadamard identity, 1/(1-z)

private:
    std::vector<Cx> coeffs_;
};

PowerSeries add(const PowerSeries& p, const PowerSeries& q);       // order = max
PowerSeries sub(const PowerSeries& p, const PowerSeries& q);
PowerSeries scale(const PowerSeries& p, Cx c);
PowerSeries mul(const PowerSeries& p, const PowerSeries& q);       // Cauchy product, order = min
PowerSeries hadamard(const PowerSeries& p, const PowerSeries& q);  // c_n = p_n q_n, order = min
PowerSeries derivative(const PowerSeries& p);
PowerSeries integrate(const PowerSeries& p);
PowerSeries reciprocal(const PowerSeries& p);                      // throws NearZeroConstantTerm
Cx eval(const PowerSeries& p, Cx z);

inline PowerSeries operator+(const PowerSeries& p, const PowerSeries& q) { return add(p, q); }
inline PowerSeries operator-(const PowerSeries& p, const PowerSeries& q) { return sub(p, q); }
inline PowerSeries operator*(const PowerSeries& p, const PowerSeries& q) { return mul(p, q); }
inline PowerSeries operator*(Cx c, const PowerSeries& p) { return scale(p, c); }

} // namespace harmconv
