#include "hvf/multiplier.hpp"

namespace hvf
{

SquareMatrix<FieldElement> epsilon_T(int mu, int r)
{
    if (r < 0) {
        throw domain_error("r must be nonnegative");
    }
    SquareMatrix<FieldElement> m = nilpotent_exp(FieldElement::varpi(mu), r);
    // Entries that happen to be rational still carry the field context.
    const auto ctx = FieldContext::get(mu);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            m(i, j) = FieldElement(ctx, m(i, j).coeffs());
        }
    }
    return m;
}

SquareMatrix<Rational> epsilon_S(int r)
{
    if (r < 0) {
        throw domain_error("r must be nonnegative");
    }
    SquareMatrix<Rational> m(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) {
        m(i, r - i) = ((r - i) % 2 == 0) ? Rational(1) : Rational(-1);
    }
    return m;
}

SquareMatrix<Rational> vector_form_S_multiplier(int r)
{
    return epsilon_S(r).inverse();
}

MultiplierPair multiplier_pair(int mu, int r)
{
    return {mu, r, epsilon_T(mu, r), epsilon_S(r)};
}

SquareMatrix<FieldElement> to_field(int mu, const SquareMatrix<Rational> &m)
{
    return map_matrix<Rational, FieldElement>(m, [mu](const Rational &q) { return FieldElement::constant(mu, q); });
}

bool verify_sym_theorem(int mu, int r)
{
    const SquareMatrix<FieldElement> t1 = epsilon_T(mu, 1);
    const SquareMatrix<FieldElement> s1 = to_field(mu, epsilon_S(1));
    return sym_power(r, t1) == epsilon_T(mu, r) && sym_power(r, s1) == to_field(mu, epsilon_S(r));
}

bool verify_presentation(int mu, int r)
{
    const std::size_t n = static_cast<std::size_t>(r) + 1;
    const FieldElement sign = FieldElement::constant(mu, Rational(r % 2 == 0 ? 1 : -1));
    const SquareMatrix<FieldElement> target = SquareMatrix<FieldElement>::identity(n) * sign;
    const SquareMatrix<FieldElement> s = to_field(mu, epsilon_S(r));
    const SquareMatrix<FieldElement> s_inv = to_field(mu, epsilon_S(r).inverse());
    const SquareMatrix<FieldElement> rot = s_inv * epsilon_T(mu, r);
    return s * s == target && rot.pow(static_cast<unsigned>(mu)) == target;
}

} // namespace hvf
