#include <lightning/verify.hpp>

#include <lightning/quadrature.hpp>

namespace lightning
{

using std::numbers::pi;

namespace
{

constexpr Complex I_UNIT(0.0, 1.0);

double check_arm(Complex z, double beta)
{
    if (!(beta >= 0.0 && beta < 2.0))
    {
        throw InputError("contour: beta must lie in [0, 2)");
    }
    const double r = std::abs(z);
    if (!(r > 0.0 && r <= 1.0 + 1e-12))
    {
        throw InputError("contour: need 0 < |z| <= 1");
    }
    if (std::abs(std::abs(std::arg(z)) - beta * pi / 2.0) > 1e-9)
    {
        throw InputError("contour: z does not lie on an arm of the V-domain");
    }
    return r;
}

} // namespace

Complex contour_integrand(Complex u, Complex z, double t)
{
    const Complex su = std::sqrt(u);
    const Complex w  = su - t;
    return z / pi / su * std::exp(w) / (std::exp(2.0 * w) + z);
}

Complex trapezoid_sum_S(Complex z, int nt, double h)
{
    if (nt < 1 || !(h > 0.0))
    {
        throw InputError("trapezoid_sum_S: need Nt >= 1 and h > 0");
    }
    const double t = std::sqrt(nt * h / 4.0);
    Complex sum(0.0);
    for (int j = 1; j <= nt; ++j)
    {
        sum += contour_integrand(Complex(j * h), z, t);
    }
    return h * sum;
}

std::vector<PoleResidue> pole_residue_pairs(Complex z, double t, double beta, int kmax)
{
    const double r = check_arm(z, beta);
    if (kmax < 0)
    {
        throw InputError("pole_residue_pairs: kmax must be non-negative");
    }
    const double a_re = t + 0.5 * std::log(r);
    if (!(a_re > 0.0))
    {
        throw InputError("pole_residue_pairs: need |z| > e^{-2T} for principal-branch poles");
    }
    const double theta = std::arg(z);
    const Complex sz   = std::sqrt(z);
    std::vector<PoleResidue> out;
    out.reserve(2 * (kmax + 1));
    for (int k = 0; k <= kmax; ++k)
    {
        const double sign_k = (k % 2 == 0) ? 1.0 : -1.0;
        for (int branch : {+1, -1})
        {
            const Complex w(a_re, theta / 2.0 + branch * pi * (k + 0.5));
            out.push_back({w * w, -static_cast<double>(branch) * sign_k * I_UNIT / pi * sz, k,
                           branch});
        }
    }
    return out;
}

double contour_regime_min_radius(int nt, double h, double beta)
{
    const double t = std::sqrt(nt * h / 4.0);
    return std::exp(4.0 + 2.0 * beta - 2.0 * t);
}

ContourSetup make_contour_setup(Complex z, int nt, double h, double beta)
{
    const double r = check_arm(z, beta);
    if (nt < 1 || !(h > 0.0))
    {
        throw InputError("contour: need Nt >= 1 and h > 0");
    }
    const double t     = std::sqrt(nt * h / 4.0);
    const double r_min = contour_regime_min_radius(nt, h, beta);
    if (r < r_min * (1.0 - 1e-12))
    {
        throw InputError("contour: |z| below the regime e^{4 + 2 beta - 2T}");
    }
    ContourSetup s{};
    s.z     = z;
    s.nt    = nt;
    s.t     = t;
    s.h     = h;
    s.beta  = beta;
    s.a     = 2.0 * pi * (t + 0.5 * std::log(r));
    s.left  = 1.0 - beta / 2.0;
    s.right = 4.0 * t * t + s.left;
    if (!(s.a > 0.0))
    {
        throw InputError("contour: rectangle half-height must be positive");
    }
    for (double side : {s.left, s.right})
    {
        const double ratio = side / h;
        if (std::abs(ratio - std::round(ratio)) < 1e-9)
        {
            throw InputError("contour: vertical side of the rectangle hits a quadrature node");
        }
    }
    const auto pairs = pole_residue_pairs(z, t, beta, 1);
    for (const auto& pr : pairs)
    {
        const bool inside = pr.pole.real() > s.left && pr.pole.real() < s.right &&
                            std::abs(pr.pole.imag()) < s.a;
        if (pr.k == 0 && !inside)
        {
            throw InputError("contour: primary pole outside the rectangle");
        }
        if (pr.k > 0 && inside)
        {
            throw InputError("contour: secondary pole inside the rectangle");
        }
    }
    s.plus  = pairs[0];
    s.minus = pairs[1];
    return s;
}

ContourTerms contour_terms(const ContourSetup& s, double abs_tol)
{
    const Complex z = s.z;
    const double t  = s.t;
    const double h  = s.h;
    auto f          = [z, t](Complex u) { return contour_integrand(u, z, t); };
    auto fd         = [z, t, h](Complex u) { return contour_integrand(u, z, t) * delta(u, h); };

    ContourTerms out{};
    quad::Options opt;
    opt.abs_tol = abs_tol / 8.0;

    // G1 with u = v^2 removes the u^{-1/2} endpoint singularity.
    auto g1 = [z, t](double v) {
        return 2.0 * z / pi * std::exp(v - t) / (std::exp(2.0 * (v - t)) + z);
    };
    const double top = 4.0 * t * t;
    out.end_ints     = quad::integrate(g1, 0.0, std::sqrt(s.left), opt) -
                   quad::integrate(f, Complex(top), Complex(s.right), opt);

    const Complex bl(s.left, -s.a), br(s.right, -s.a), tr(s.right, s.a), tl(s.left, s.a);
    const Complex ml(s.left, 0.0), mr(s.right, 0.0);

    quad::Options horiz = opt;
    horiz.min_panels    = std::max(16L, static_cast<long>(s.nt));
    quad::Options vert  = opt;
    vert.min_panels     = std::max(8L, static_cast<long>(std::ceil(s.a * 2.0 * pi / h)));

    // delta jumps across the real axis, so the vertical sides are split there.
    out.gamma_int = quad::integrate(fd, bl, br, horiz) + quad::integrate(fd, br, mr, vert) +
                    quad::integrate(fd, mr, tr, vert) + quad::integrate(fd, tr, tl, horiz) +
                    quad::integrate(fd, tl, ml, vert) + quad::integrate(fd, ml, bl, vert);

    out.residue_plus  = 2.0 * pi * I_UNIT * s.plus.residue * delta(s.plus.pole, h);
    out.residue_minus = 2.0 * pi * I_UNIT * s.minus.residue * delta(s.minus.pole, h);
    out.residue_term  = out.residue_plus + out.residue_minus;
    return out;
}

ConjectureCheck check_conjecture_bound(const ContourSetup& setup, double cap)
{
    const ContourTerms terms = contour_terms(setup);
    const double scale       = std::exp(-setup.t);
    ConjectureCheck c{};
    c.lhs   = std::abs(terms.gamma_int);
    c.ratio = c.lhs / scale;
    if (setup.beta == 0.0)
    {
        c.rhs  = 12.0 * scale;
        c.pass = c.lhs < c.rhs;
    }
    else
    {
        c.rhs  = cap * scale;
        c.pass = c.ratio <= cap;
    }
    return c;
}

std::vector<ResidueRateRow> residue_rate_check(double h, double beta,
                                               std::span<const int> nts,
                                               std::span<const double> radii)
{
    std::vector<ResidueRateRow> rows;
    const Complex dir = std::polar(1.0, beta * pi / 2.0);
    for (int nt : nts)
    {
        const double t     = std::sqrt(nt * h / 4.0);
        const double scale = std::exp(-t);
        for (double r : radii)
        {
            const Complex z  = r * dir;
            const auto pairs = pole_residue_pairs(z, t, beta, 0);
            const Complex rp = 2.0 * pi * I_UNIT * pairs[0].residue * delta(pairs[0].pole, h);
            const Complex rm = 2.0 * pi * I_UNIT * pairs[1].residue * delta(pairs[1].pole, h);
            rows.push_back({nt, r, t, std::max(std::abs(rp), std::abs(rm)) / scale,
                            std::abs(rp + rm) / scale});
        }
    }
    return rows;
}

} // namespace lightning
