#include "harmconv/power_series.hpp"

#include <algorithm>
#include <cmath>

namespace harmconv {

namespace {

bool finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

PowerSeries::PowerSeries(std::vector<Cx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw Error("PowerSeries: empty coefficient list");
    for (Cx c : coeffs_)
        if (!finite(c))
            throw Error("PowerSeries: non-finite coefficient");
}

PowerSeries PowerSeries::truncated(int order) const {
    std::vector<Cx> c(static_cast<size_t>(order) + 1, Cx{0.0, 0.0});
    for (int n = 0; n <= order; ++n)
        c[static_cast<size_t>(n)] = coeff(n);
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::geometric(double gamma, int order) {
    std::vector<Cx> c(static_cast<size_t>(order) + 1, Cx{0.0, 0.0});
    for (int n = 1; n <= order; ++n)
        c[static_cast<size_t>(n)] = unit_phase(static_cast<double>(n - 1) * gamma);
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::all_ones(int order) {
    return PowerSeries(std::vector<Cx>(static_cast<size_t>(order) + 1, Cx{1.0, 0.0}));
}

PowerSeries add(const PowerSeries& p, const PowerSeries& q) {
    const int n = std::max(p.order(), q.order());
    std::vector<Cx> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[static_cast<size_t>(k)] = p.coeff(k) + q.coeff(k);
    return PowerSeries(std::move(c));
}

PowerSeries sub(const PowerSeries& p, const PowerSeries& q) {
    const int n = std::max(p.order(), q.order());
    std::vector<Cx> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[static_cast<size_t>(k)] = p.coeff(k) - q.coeff(k);
    return PowerSeries(std::move(c));
}

PowerSeries scale(const PowerSeries& p, Cx c) {
    std::vector<Cx> out(p.coeffs());
    for (Cx& x : out)
        x *= c;
    return PowerSeries(std::move(out));
}

PowerSeries mul(const PowerSeries& p, const PowerSeries& q) {
    const int n = std::min(p.order(), q.order());
    std::vector<Cx> c(static_cast<size_t>(n) + 1, Cx{0.0, 0.0});
    for (int i = 0; i <= n; ++i) {
        const Cx pi = p.coeff(i);
        if (pi == Cx{0.0, 0.0})
            continue;
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<size_t>(i + j)] += pi * q.coeff(j);
    }
    return PowerSeries(std::move(c));
}

PowerSeries hadamard(const PowerSeries& p, const PowerSeries& q) {
    const int n = std::min(p.order(), q.order());
    std::vector<Cx> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[static_cast<size_t>(k)] = p.coeff(k) * q.coeff(k);
    return PowerSeries(std::move(c));
}

PowerSeries derivative(const PowerSeries& p) {
    const int n = std::max(p.order() - 1, 0);
    std::vector<Cx> c(static_cast<size_t>(n) + 1, Cx{0.0, 0.0});
    for (int k = 0; k <= p.order() - 1; ++k)
        c[static_cast<size_t>(k)] = static_cast<double>(k + 1) * p.coeff(k + 1);
    return PowerSeries(std::move(c));
}

PowerSeries integrate(const PowerSeries& p) {
    std::vector<Cx> c(static_cast<size_t>(p.order()) + 2, Cx{0.0, 0.0});
    for (int k = 0; k <= p.order(); ++k)
        c[static_cast<size_t>(k) + 1] = p.coeff(k) / static_cast<double>(k + 1);
    return PowerSeries(std::move(c));
}

PowerSeries reciprocal(const PowerSeries& p) {
    const Cx p0 = p.coeff(0);
    if (std::abs(p0) <= 1e-12)
        throw NearZeroConstantTerm();
    const int n = p.order();
    std::vector<Cx> c(static_cast<size_t>(n) + 1, Cx{0.0, 0.0});
    const Cx inv = 1.0 / p0;
    c[0] = inv;
    for (int k = 1; k <= n; ++k) {
        Cx s{0.0, 0.0};
        for (int j = 1; j <= k; ++j)
            s += p.coeff(j) * c[static_cast<size_t>(k - j)];
        c[static_cast<size_t>(k)] = -inv * s;
    }
    return PowerSeries(std::move(c));
}

Cx eval(const PowerSeries& p, Cx z) {
    Cx acc{0.0, 0.0};
    for (int k = p.order(); k >= 0; --k)
        acc = acc * z + p.coeff(k);
    return acc;
}

} // namespace harmconv
