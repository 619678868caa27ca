#include "hvf/numeric.hpp"

#include <random>

namespace hvf
{

std::vector<std::complex<double>> default_plan_points(std::uint64_t seed, int count)
{
    if (count < 1) {
        throw domain_error("plan needs at least one point");
    }
    std::mt19937_64 gen(seed);
    std::vector<std::complex<double>> pts;
    for (int i = 0; i < count; ++i) {
        const double rho = 0.9 + 0.2 * unit_from_bits(gen());
        const double theta = std::numbers::pi / 3 + (std::numbers::pi / 3) * unit_from_bits(gen());
        pts.push_back(std::polar(rho, theta));
    }
    return pts;
}

long dim_automorphic(int mu, int weight)
{
    if (mu < 3) {
        throw domain_error("mu must be at least 3");
    }
    if (weight < 0 || weight % 4 != 0) {
        throw unsupported_error("dimension formula is only available for weights divisible by 4");
    }
    return static_cast<long>(weight) * (mu - 2) / (4L * mu) + 1;
}

} // namespace hvf
