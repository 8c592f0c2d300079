#include "harmconv/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace harmconv {

Polynomial::Polynomial(std::vector<Cx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw Error("Polynomial: at least one coefficient required");
    for (Cx c : coeffs_)
        if (!(std::isfinite(c.real()) && std::isfinite(c.imag())))
            throw Error("Polynomial: non-finite coefficient");
}

int Polynomial::degree() const {
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
        if (std::abs(coeffs_[static_cast<size_t>(k)]) >= kDegreeStripTol)
            return k;
    return 0;
}

bool Polynomial::is_zero() const {
    for (Cx c : coeffs_)
        if (std::abs(c) >= kDegreeStripTol)
            return false;
    return true;
}

Polynomial Polynomial::stripped() const {
    const int d = degree();
    return Polynomial(std::vector<Cx>(coeffs_.begin(), coeffs_.begin() + d + 1));
}

Polynomial Polynomial::monomial(Cx c, int power) {
    std::vector<Cx> v(static_cast<size_t>(power) + 1, Cx{0.0, 0.0});
    v.back() = c;
    return Polynomial(std::move(v));
}

Cx eval(const Polynomial& p, Cx z) {
    Cx acc{0.0, 0.0};
    for (int k = static_cast<int>(p.coeffs().size()) - 1; k >= 0; --k)
        acc = acc * z + p.coeffs()[static_cast<size_t>(k)];
    return acc;
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    const size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    std::vector<Cx> c(n);
    for (size_t k = 0; k < n; ++k)
        c[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
    return Polynomial(std::move(c));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    std::vector<Cx> c(p.coeffs().size() + q.coeffs().size() - 1, Cx{0.0, 0.0});
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] == Cx{0.0, 0.0})
            continue;
        for (size_t j = 0; j < q.coeffs().size(); ++j)
            c[i + j] += p.coeffs()[i] * q.coeffs()[j];
    }
    return Polynomial(std::move(c));
}

Polynomial scale(const Polynomial& p, Cx c) {
    std::vector<Cx> out(p.coeffs());
    for (Cx& x : out)
        x *= c;
    return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
    if (p.coeffs().size() == 1)
        return Polynomial();
    std::vector<Cx> c(p.coeffs().size() - 1);
    for (size_t k = 0; k < c.size(); ++k)
        c[k] = static_cast<double>(k + 1) * p.coeffs()[k + 1];
    return Polynomial(std::move(c));
}

Polynomial shift_up(const Polynomial& p, int m) {
    std::vector<Cx> c(static_cast<size_t>(m), Cx{0.0, 0.0});
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return Polynomial(std::move(c));
}

Polynomial deflate(const Polynomial& p, Cx root) {
    const Polynomial q = p.stripped();
    const int d = q.degree();
    if (d < 1)
        throw Error("deflate: constant polynomial");
    std::vector<Cx> out(static_cast<size_t>(d), Cx{0.0, 0.0});
    Cx carry = q.coeff(d);
    for (int k = d - 1; k >= 0; --k) {
        out[static_cast<size_t>(k)] = carry;
        carry = q.coeff(k) + carry * root;
    }
    return Polynomial(std::move(out));
}

Polynomial star(const Polynomial& p) {
    const int d = p.degree();
    std::vector<Cx> c(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        c[static_cast<size_t>(k)] = std::conj(p.coeff(d - k));
    return Polynomial(std::move(c));
}

namespace {

std::vector<Cx> quadratic_roots(Cx a, Cx b, Cx c) {
    // Stable branch: q = -(b + sign * sqrt(disc))/2 with sign avoiding cancellation.
    const Cx disc = b * b - 4.0 * a * c;
    Cx s = std::sqrt(disc);
    if (std::real(std::conj(b) * s) < 0.0)
        s = -s;
    const Cx q = -0.5 * (b + s);
    Cx r1, r2;
    if (std::abs(q) > 0.0) {
        r1 = q / a;
        r2 = c / q;
    } else {
        r1 = Cx{0.0, 0.0};
        r2 = -b / a; // b = -(r1+r2)a with r1 = 0
    }
    return {r1, r2};
}

double max_residual(const Polynomial& monic, const std::vector<Cx>& roots) {
    double worst = 0.0;
    for (Cx r : roots)
        worst = std::max(worst, std::abs(eval(monic, r)));
    return worst;
}

} // namespace

RootSet roots_of(const Polynomial& p) {
    const Polynomial q = p.stripped();
    const int d = q.degree();
    if (d < 1)
        throw Error("roots_of: degree >= 1 required");

    const Cx inv_lead = 1.0 / q.leading();
    Polynomial monic = scale(q, inv_lead);

    RootSet out;
    if (d == 1) {
        out.roots = {-monic.coeff(0)};
    } else if (d == 2) {
        out.roots = quadratic_roots(Cx{1.0, 0.0}, monic.coeff(1), monic.coeff(0));
    } else {
        // Durand-Kerner, deterministic seeds (0.4+0.9i)^k.
        std::vector<Cx> r(static_cast<size_t>(d));
        const Cx base{0.4, 0.9};
        Cx seed = base;
        for (int k = 0; k < d; ++k) {
            r[static_cast<size_t>(k)] = seed;
            seed *= base;
        }
        const int max_rounds = 500;
        const double step_tol = 1e-13;
        bool converged = false;
        for (int round = 0; round < max_rounds && !converged; ++round) {
            double worst_step = 0.0;
            for (int i = 0; i < d; ++i) {
                Cx denom{1.0, 0.0};
                for (int j = 0; j < d; ++j)
                    if (j != i)
                        denom *= r[static_cast<size_t>(i)] - r[static_cast<size_t>(j)];
                if (denom == Cx{0.0, 0.0})
                    denom = Cx{1e-300, 0.0};
                const Cx dr = eval(monic, r[static_cast<size_t>(i)]) / denom;
                r[static_cast<size_t>(i)] -= dr;
                worst_step = std::max(worst_step, std::abs(dr));
            }
            converged = worst_step < step_tol;
        }
        if (!converged) {
            const double res = max_residual(monic, r);
            if (res > 1e-9)
                throw NoConvergence("roots_of: Durand-Kerner stalled, best residual " + std::to_string(res));
        }
        out.roots = std::move(r);
    }
    out.residual = max_residual(monic, out.roots);
    return out;
}

Polynomial cohn_reduce(const Polynomial& p) {
    const Polynomial q = p.stripped();
    const int d = q.degree();
    if (d < 1)
        throw Error("cohn_reduce: degree >= 1 required");
    if (std::abs(q.leading() - Cx{1.0, 0.0}) > 1e-12)
        throw NotMonic();
    const Cx a0 = q.coeff(0);
    if (std::abs(a0) >= 1.0)
        throw ConstantTermNotInDisk();
    const Polynomial num = add(q, scale(star(q), -a0));
    // num has zero constant term by construction; divide by z.
    std::vector<Cx> c(static_cast<size_t>(d), Cx{0.0, 0.0});
    for (int k = 1; k <= d; ++k)
        c[static_cast<size_t>(k) - 1] = num.coeff(k);
    return Polynomial(std::move(c));
}

namespace {

constexpr double kBoundaryTol = 1e-9;   // |root| <= 1 + tol counts as inside the closed disk
constexpr double kCohnDegenerate = 1e-10;

// Cohn recursion; returns no value when it hits the degenerate band.
enum class CohnVerdict { AllInside, NotAllInside, Degenerate };

CohnVerdict cohn_verdict(Polynomial p) {
    for (;;) {
        p = p.stripped();
        const int d = p.degree();
        if (d == 0)
            return CohnVerdict::AllInside;
        p = scale(p, 1.0 / p.leading());
        const double a0 = std::abs(p.coeff(0));
        if (a0 >= 1.0 - kCohnDegenerate) {
            // |product of roots| = |p(0)| > 1 forces a root outside the closed disk.
            if (a0 > 1.0 + kBoundaryTol)
                return CohnVerdict::NotAllInside;
            return CohnVerdict::Degenerate;
        }
        p = cohn_reduce(p);
    }
}

} // namespace

DiskLocation zeros_in_closed_disk(const Polynomial& p) {
    const Polynomial q = p.stripped();
    if (q.degree() < 1)
        throw Error("zeros_in_closed_disk: degree >= 1 required");

    const RootSet rs = roots_of(q);
    DiskLocation loc;
    for (Cx r : rs.roots)
        if (std::abs(r) <= 1.0 + kBoundaryTol)
            ++loc.count_inside;
    const bool oracle_all = loc.count_inside == static_cast<int>(rs.roots.size());

    const CohnVerdict v = cohn_verdict(q);
    loc.all_inside = v == CohnVerdict::Degenerate ? oracle_all : v == CohnVerdict::AllInside;
    return loc;
}

} // namespace harmconv
