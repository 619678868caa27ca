#include "hvf/io.hpp"

#include <iomanip>
#include <sstream>

namespace hvf::io
{

namespace
{

std::string latex_rational(const Rational &q)
{
    if (q.is_integer()) {
        return q.numerator().get_str();
    }
    const std::string sign = q.sign() < 0 ? "-" : "";
    const Rational a = abs(q);
    return sign + "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

template <typename T, typename F> std::string latex_matrix(const SquareMatrix<T> &m, F &&cell)
{
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            os << (j == 0 ? "  " : " & ") << cell(m(i, j));
        }
        os << (i + 1 < m.dim() ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}";
    return os.str();
}

json coeff_json(const Rational &q)
{
    return q.str();
}

json coeff_json(double v)
{
    return v;
}

json coeff_json(long double v)
{
    return static_cast<double>(v);
}

std::string coeff_csv(const Rational &q)
{
    return q.str();
}

std::string coeff_csv(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string coeff_csv(long double v)
{
    std::ostringstream os;
    os << std::setprecision(21) << v;
    return os.str();
}

template <typename T> json series_json(const QSeries<T> &s)
{
    json arr = json::array();
    for (const auto &c : s.coeffs()) {
        arr.push_back(coeff_json(c));
    }
    return arr;
}

template <typename T> json hauptbuch_json(const Hauptbuch<T> &h)
{
    json comps = json::array();
    for (int l = 0; l <= h.depth; ++l) {
        comps.push_back({{"index", l},
                         {"weight", h.weight - 2 * l},
                         {"c_power", l},
                         {"coeffs", series_json(h.ghat[static_cast<std::size_t>(l)])}});
    }
    return {{"mu", h.mu},
            {"weight", h.weight},
            {"depth", h.depth},
            {"structure_constant", to_json(h.C)},
            {"components", comps}};
}

} // namespace

json to_json(const Rational &q)
{
    return q.str();
}

json to_json(const FieldElement &a)
{
    json arr = json::array();
    for (const auto &c : a.coeffs()) {
        arr.push_back(c.str());
    }
    return arr;
}

FieldElement field_from_json(int mu, const json &j)
{
    if (!j.is_array()) {
        throw domain_error("field element must be a JSON array");
    }
    std::vector<Rational> coeffs;
    for (const auto &c : j) {
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    return FieldElement(FieldContext::get(mu), coeffs);
}

json to_json(const SquareMatrix<Rational> &m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back(m(i, j).str());
        }
        rows.push_back(row);
    }
    return rows;
}

json to_json(const SquareMatrix<FieldElement> &m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back(to_json(m(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

std::string to_latex(const SquareMatrix<Rational> &m)
{
    return latex_matrix(m, [](const Rational &q) { return latex_rational(q); });
}

std::string to_latex(const SquareMatrix<FieldElement> &m)
{
    return latex_matrix(m, [](const FieldElement &a) { return a.latex(); });
}

std::string to_text(const SquareMatrix<FieldElement> &m)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            os << (j == 0 ? "" : "\t") << m(i, j).str();
        }
        os << "\n";
    }
    return os.str();
}

json to_json(const QSeries<Rational> &s)
{
    return series_json(s);
}

json to_json(const QSeries<double> &s)
{
    return series_json(s);
}

json to_json(const QSeries<long double> &s)
{
    return series_json(s);
}

QSeries<Rational> series_from_json(const json &j)
{
    if (!j.is_array() || j.empty()) {
        throw domain_error("series must be a nonempty JSON array");
    }
    std::vector<Rational> c;
    for (const auto &v : j) {
        if (v.is_string()) {
            c.push_back(Rational::parse(v.get<std::string>()));
        } else if (v.is_number_integer()) {
            c.push_back(Rational(v.get<long>()));
        } else {
            throw domain_error("series coefficients must be \"p/q\" strings or integers");
        }
    }
    return QSeries<Rational>(c);
}

template <typename T> json family_to_json(const EisensteinFamily<T> &fam)
{
    json coeffs = json::object();
    json weights = json::array();
    for (int k = 1; k <= fam.mu; ++k) {
        weights.push_back(2 * k);
        coeffs[std::to_string(2 * k)] = series_json(fam.series(2 * k));
    }
    json pins = json::object();
    for (const auto &[n, v] : fam.pins) {
        pins[std::to_string(n)] = coeff_json(v);
    }
    return {{"mu", fam.mu},
            {"trunc", fam.trunc},
            {"a1", coeff_json(fam.a1)},
            {"exact", scalar_traits<T>::exact},
            {"pins", pins},
            {"weights", weights},
            {"coefficients", coeffs},
            {"closure_residual", series_json(fam.closure_residual)}};
}

template <typename T> std::string family_to_csv(const EisensteinFamily<T> &fam)
{
    std::ostringstream os;
    os << "n";
    for (int k = 1; k <= fam.mu; ++k) {
        os << ",E" << 2 * k;
    }
    os << ",closure_residual\n";
    for (int n = 0; n <= fam.trunc; ++n) {
        os << n;
        for (int k = 1; k <= fam.mu; ++k) {
            os << "," << coeff_csv(fam.series(2 * k)[n]);
        }
        os << "," << coeff_csv(fam.closure_residual[n]) << "\n";
    }
    return os.str();
}

template json family_to_json(const EisensteinFamily<Rational> &);
template json family_to_json(const EisensteinFamily<double> &);
template json family_to_json(const EisensteinFamily<long double> &);
template std::string family_to_csv(const EisensteinFamily<Rational> &);
template std::string family_to_csv(const EisensteinFamily<double> &);
template std::string family_to_csv(const EisensteinFamily<long double> &);

json to_json(const StructureConstant &C)
{
    return {{"kind", C.kind()},
            {"numerator", to_json(C.numerator())},
            {"text", C.str()},
            {"imag", C.value<double>().imag()}};
}

json to_json(const VerificationReport &r)
{
    json pts = json::array();
    for (const auto &p : r.points) {
        pts.push_back({{"z", {{"re", p.z.real()}, {"im", p.z.imag()}}},
                       {"residual", p.residual},
                       {"tail_bound", p.tail_bound}});
    }
    return {{"check", r.check},
            {"mu", r.mu},
            {"weight", r.weight},
            {"depth", r.depth},
            {"points", pts},
            {"max_residual", r.max_residual},
            {"max_tail_bound", r.max_tail},
            {"tol", r.tol},
            {"pass", r.pass}};
}

VerificationReport report_from_json(const json &j)
{
    VerificationReport r;
    r.check = j.at("check").get<std::string>();
    r.mu = j.at("mu").get<int>();
    r.weight = j.at("weight").get<int>();
    r.depth = j.at("depth").get<int>();
    for (const auto &p : j.at("points")) {
        r.points.push_back({{p.at("z").at("re").get<double>(), p.at("z").at("im").get<double>()},
                            p.at("residual").get<double>(),
                            p.at("tail_bound").get<double>()});
    }
    r.max_residual = j.at("max_residual").get<double>();
    r.max_tail = j.value("max_tail_bound", 0.0);
    r.tol = j.value("tol", 0.0);
    r.pass = j.at("pass").get<bool>();
    return r;
}

template <typename T> QuasiForm<T> quasiform_from_json(const json &j, const EisensteinFamily<T> &fam)
{
    QuasiForm<T> u;
    u.mu = j.at("mu").get<int>();
    u.weight = j.at("weight").get<int>();
    u.depth = j.at("depth").get<int>();
    if (u.mu != fam.mu) {
        throw domain_error("form mu does not match the Eisenstein family");
    }
    const json &comps = j.at("components");
    if (!comps.is_array()) {
        throw domain_error("components must be an array");
    }
    const int n = fam.trunc;
    for (const json &c : comps) {
        const int w = c.at("weight").get<int>();
        if (c.contains("coeffs")) {
            // A shorter explicit list truncates the whole form.
            const QSeries<Rational> s = series_from_json(c.at("coeffs")).truncate(n);
            u.components.push_back(convert_series<T>(s).with_weight(w));
        } else if (c.contains("monomials")) {
            QSeries<T> s(n, w);
            for (const auto &mono : c.at("monomials")) {
                const T coeff = from_rational<T>(Rational::parse(mono.at("coeff").get<std::string>()));
                QSeries<T> term = QSeries<T>::constant(n, T(1), 0);
                int tw = 0;
                for (const auto &f : mono.at("factors")) {
                    const int fw = f.get<int>();
                    term = term * fam.series(fw);
                    tw += fw;
                }
                if (tw != w) {
                    throw domain_error("monomial weight " + std::to_string(tw) + " does not match component weight " +
                                       std::to_string(w));
                }
                s += (term * coeff).with_weight(w);
            }
            u.components.push_back(s);
        } else {
            throw domain_error("component needs \"coeffs\" or \"monomials\"");
        }
    }
    u.validate();
    return u;
}

template QuasiForm<Rational> quasiform_from_json(const json &, const EisensteinFamily<Rational> &);
template QuasiForm<double> quasiform_from_json(const json &, const EisensteinFamily<double> &);
template QuasiForm<long double> quasiform_from_json(const json &, const EisensteinFamily<long double> &);

json quasiform_to_json(const QuasiForm<Rational> &u)
{
    json comps = json::array();
    for (int k = 0; k <= u.depth; ++k) {
        comps.push_back({{"weight", u.weight - 2 * k}, {"coeffs", to_json(u.components[static_cast<std::size_t>(k)])}});
    }
    return {{"mu", u.mu}, {"weight", u.weight}, {"depth", u.depth}, {"components", comps}};
}

json hauptbuch_to_json(const Hauptbuch<Rational> &h)
{
    return hauptbuch_json(h);
}

json hauptbuch_to_json(const Hauptbuch<double> &h)
{
    return hauptbuch_json(h);
}

json hauptbuch_to_json(const Hauptbuch<long double> &h)
{
    return hauptbuch_json(h);
}

template <typename R>
json calibration_to_json(int mu, int trunc, double tol, const StructureConstant &C, const CalibrationResult<R> &cal)
{
    json pins = json::object();
    json scales = json::object();
    for (const auto &[n, v] : cal.pins) {
        pins[std::to_string(n)] = static_cast<double>(v);
    }
    for (const auto &[n, v] : cal.pin_scales) {
        scales[std::to_string(n)] = static_cast<double>(v);
    }
    return {{"mu", mu},
            {"trunc", trunc},
            {"tol", tol},
            {"structure_constant", to_json(C)},
            {"target_E2_at_i", static_cast<double>(C.fixed_point<R>())},
            {"a1", static_cast<double>(cal.a1)},
            {"pins", pins},
            {"pin_scales", scales},
            {"residual", static_cast<double>(cal.residual)},
            {"tail_bound", static_cast<double>(cal.tail)},
            {"iterations", cal.iterations}};
}

template json calibration_to_json(int, int, double, const StructureConstant &, const CalibrationResult<double> &);
template json calibration_to_json(int, int, double, const StructureConstant &, const CalibrationResult<long double> &);

} // namespace hvf::io
