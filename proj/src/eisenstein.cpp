#include "hvf/eisenstein.hpp"

#include <mutex>
#include <numeric>

namespace hvf
{

StructureConstant StructureConstant::from_system(int mu)
{
    if (mu < 3) {
        throw domain_error("mu must be at least 3");
    }
    FieldElement num = FieldElement::varpi(mu) * FieldElement(Rational(2 * mu, mu - 2));
    return StructureConstant(mu, num, "system");
}

StructureConstant StructureConstant::from_lcm(int mu)
{
    if (mu < 3) {
        throw domain_error("mu must be at least 3");
    }
    return StructureConstant(mu, FieldElement::constant(mu, Rational(std::lcm(2, mu))), "lcm");
}

StructureConstant StructureConstant::with_numerator(int mu, const Rational &numerator)
{
    if (mu < 3) {
        throw domain_error("mu must be at least 3");
    }
    return StructureConstant(mu, FieldElement::constant(mu, numerator), "custom");
}

std::vector<Rational> recursion_pivots(int mu, int trunc)
{
    if (mu < 3) {
        throw domain_error("mu must be at least 3");
    }
    static std::mutex mtx;
    static std::map<int, std::vector<Rational>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto &table = cache[mu];
    const int have = static_cast<int>(table.size()) - 1;
    if (have >= trunc) {
        return std::vector<Rational>(table.begin(), table.begin() + trunc + 1);
    }
    // On the zero family every lower coefficient vanishes, so the residual
    // at a_n = 1 minus the residual at a_n = 0 is exactly the pivot.
    const detail::SystemCoefficients<Rational> sc(mu);
    std::vector<std::vector<Rational>> e(static_cast<std::size_t>(mu) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(trunc) + 1, Rational(0)));
    for (int k = 1; k <= mu; ++k) {
        e[k][0] = Rational(1);
    }
    table.resize(static_cast<std::size_t>(trunc) + 1);
    table[0] = Rational(0);
    for (int n = std::max(1, have + 1); n <= trunc; ++n) {
        const Rational r0 = detail::fill_order(mu, sc, e, n, Rational(0));
        const Rational r1 = detail::fill_order(mu, sc, e, n, Rational(1));
        detail::fill_order(mu, sc, e, n, Rational(0));
        table[static_cast<std::size_t>(n)] = r1 - r0;
    }
    return table;
}

std::vector<int> degenerate_orders(int mu, int trunc)
{
    const auto table = recursion_pivots(mu, trunc);
    std::vector<int> out;
    for (int n = 2; n <= trunc; ++n) {
        if (table[static_cast<std::size_t>(n)].is_zero()) {
            out.push_back(n);
        }
    }
    return out;
}

} // namespace hvf
