#include <lightning/poles.hpp>

#include <sstream>

namespace lightning
{

namespace
{

void check_cluster_args(const char* what, int n1, double sigma, double scale)
{
    if (n1 < 1)
    {
        throw InputError(std::string(what) + ": N1 must be at least 1");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma))
    {
        throw InputError(std::string(what) + ": sigma must be positive");
    }
    if (!(scale > 0.0) || !std::isfinite(scale))
    {
        throw InputError(std::string(what) + ": scale C must be positive");
    }
}

} // namespace

PoleSet uniform_poles(int n1, double sigma, double scale)
{
    check_cluster_args("uniform_poles", n1, sigma, scale);
    return PoleSet{uniform_pole_values<double>(n1, sigma, scale),
                   UniformScheme{n1, sigma, scale}};
}

PoleSet tapered_poles(int n1, double sigma, double scale)
{
    check_cluster_args("tapered_poles", n1, sigma, scale);
    return PoleSet{tapered_pole_values<double>(n1, sigma, scale),
                   TaperedScheme{n1, sigma, scale}};
}

PoleSet big_poles(int n, int n2)
{
    if (n < 1 || n2 < 1)
    {
        throw InputError("big_poles: N and N2 must be at least 1");
    }
    return PoleSet{big_pole_values<double>(n, n2), BigAsymptoticScheme{n, n2}};
}

std::string PoleSet::describe() const
{
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&os](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, UniformScheme>)
            {
                os << "uniform(N1=" << s.n1 << ",sigma=" << s.sigma << ",C=" << s.scale << ")";
            }
            else if constexpr (std::is_same_v<S, TaperedScheme>)
            {
                os << "tapered(N1=" << s.n1 << ",sigma=" << s.sigma << ",C=" << s.scale << ")";
            }
            else
            {
                os << "big(N=" << s.n << ",N2=" << s.n2 << ")";
            }
        },
        scheme);
    return os.str();
}

int default_poly_degree(int n1)
{
    return static_cast<int>(std::ceil(1.3 * std::sqrt(static_cast<double>(n1))));
}

} // namespace lightning
