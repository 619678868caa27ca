#ifndef HVF_IO_HPP
#define HVF_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "hvf/calibrate.hpp"
#include "hvf/forms.hpp"
#include "hvf/matrix.hpp"
#include "hvf/numeric.hpp"

namespace hvf::io
{

using nlohmann::json;

json to_json(const Rational &q);
json to_json(const FieldElement &a); // array of "p/q", ascending in varpi
FieldElement field_from_json(int mu, const json &j);

json to_json(const SquareMatrix<Rational> &m);
json to_json(const SquareMatrix<FieldElement> &m);
std::string to_latex(const SquareMatrix<Rational> &m);
std::string to_latex(const SquareMatrix<FieldElement> &m);
std::string to_text(const SquareMatrix<FieldElement> &m);

json to_json(const QSeries<Rational> &s);
json to_json(const QSeries<double> &s);
json to_json(const QSeries<long double> &s);
QSeries<Rational> series_from_json(const json &j);

// {mu, trunc, a1, pins, weights, coefficients: {"2": [...], ...}, closure_residual: [...]}
template <typename T> json family_to_json(const EisensteinFamily<T> &fam);
// Header n,E2,E4,...,closure_residual; one row per order.
template <typename T> std::string family_to_csv(const EisensteinFamily<T> &fam);

json to_json(const StructureConstant &C);
json to_json(const VerificationReport &r);
VerificationReport report_from_json(const json &j);

// Components are {"weight", "coeffs": ["p/q", ...]} or
// {"weight", "monomials": [{"coeff": "p/q", "factors": [4, 4, 6]}]} where
// each factor is the weight of an Eisenstein member of the family.
template <typename T> QuasiForm<T> quasiform_from_json(const json &j, const EisensteinFamily<T> &fam);
json quasiform_to_json(const QuasiForm<Rational> &u);

json hauptbuch_to_json(const Hauptbuch<Rational> &h);
json hauptbuch_to_json(const Hauptbuch<double> &h);
json hauptbuch_to_json(const Hauptbuch<long double> &h);

template <typename R> json calibration_to_json(int mu, int trunc, double tol, const StructureConstant &C,
                                               const CalibrationResult<R> &cal);

} // namespace hvf::io

#endif
