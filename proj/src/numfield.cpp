#include "hvf/numfield.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include <mpfr.h>

#include "hvf/errors.hpp"

namespace hvf
{

namespace
{

using IntCoeffs = std::vector<BigInt>;

void trim_int(IntCoeffs &p)
{
    while (p.size() > 1 && p.back() == 0) {
        p.pop_back();
    }
}

// Exact division of integer polynomials where the divisor is monic.
IntCoeffs divide_monic(IntCoeffs num, const IntCoeffs &den)
{
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        return {BigInt(0)};
    }
    IntCoeffs quot(num.size() - dd, BigInt(0));
    for (std::size_t i = num.size(); i-- > dd;) {
        const BigInt c = num[i];
        quot[i - dd] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            num[i - dd + j] -= c * den[j];
        }
    }
    for (const auto &v : num) {
        if (v != 0) {
            throw domain_error("non-exact polynomial division");
        }
    }
    trim_int(quot);
    return quot;
}

std::string compact(const Rational &q)
{
    return q.is_integer() ? q.numerator().get_str() : q.str();
}

using RatPoly = std::vector<Rational>;

void trim_rat(RatPoly &p)
{
    while (p.size() > 1 && p.back().is_zero()) {
        p.pop_back();
    }
    if (p.empty()) {
        p.push_back(Rational(0));
    }
}

bool rat_is_zero(const RatPoly &p)
{
    return p.size() == 1 && p[0].is_zero();
}

RatPoly rat_sub(RatPoly a, const RatPoly &b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), Rational(0));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim_rat(a);
    return a;
}

RatPoly rat_mul(const RatPoly &a, const RatPoly &b)
{
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim_rat(out);
    return out;
}

void rat_divmod(const RatPoly &num, const RatPoly &den, RatPoly &quot, RatPoly &rem)
{
    rem = num;
    const std::size_t dd = den.size() - 1;
    if (rem.size() < den.size()) {
        quot = {Rational(0)};
        return;
    }
    quot.assign(rem.size() - dd, Rational(0));
    const Rational lead_inv = den.back().inverse();
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i].is_zero()) {
            continue;
        }
        const Rational c = rem[i] * lead_inv;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] -= c * den[j];
        }
    }
    trim_rat(quot);
    rem.resize(dd == 0 ? 1 : dd);
    trim_rat(rem);
}

struct MpfrValue {
    mpfr_t v;
    explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(v, bits); }
    ~MpfrValue() { mpfr_clear(v); }
    MpfrValue(const MpfrValue &) = delete;
    MpfrValue &operator=(const MpfrValue &) = delete;
};

void mpfr_varpi(mpfr_t out, int mu)
{
    mpfr_const_pi(out, MPFR_RNDN);
    mpfr_div_si(out, out, mu, MPFR_RNDN);
    mpfr_cos(out, out, MPFR_RNDN);
    mpfr_mul_ui(out, out, 2, MPFR_RNDN);
}

// Horner evaluation of the element at varpi_mu with the given precision.
void mpfr_embed(mpfr_t out, int mu, const std::vector<Rational> &coeffs, mpfr_prec_t bits)
{
    mpfr_set_ui(out, 0, MPFR_RNDN);
    if (mu == 0) {
        mpfr_set_q(out, coeffs[0].raw().get_mpq_t(), MPFR_RNDN);
        return;
    }
    MpfrValue w(bits);
    mpfr_varpi(w.v, mu);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        mpfr_mul(out, out, w.v, MPFR_RNDN);
        mpfr_add_q(out, out, coeffs[i].raw().get_mpq_t(), MPFR_RNDN);
    }
}

} // namespace

std::string IntPolynomial::str(const std::string &var) const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const BigInt &c = coeffs[i];
        if (c == 0 && coeffs.size() > 1) {
            continue;
        }
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            os << mag.get_str();
        }
        if (i >= 1) {
            os << var;
        }
        if (i >= 2) {
            os << "^" << i;
        }
    }
    return os.str();
}

IntPolynomial cyclotomic_polynomial(int n)
{
    if (n < 1) {
        throw domain_error("cyclotomic index must be positive");
    }
    static std::mutex mtx;
    static std::map<int, IntPolynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(n); it != cache.end()) {
            return it->second;
        }
    }
    IntCoeffs p(static_cast<std::size_t>(n) + 1, BigInt(0));
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = divide_monic(p, cyclotomic_polynomial(d).coeffs);
        }
    }
    IntPolynomial out{p};
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(n, out);
    return out;
}

IntPolynomial minimal_polynomial(int mu)
{
    if (mu < 3) {
        throw domain_error("mu must be at least 3");
    }
    static std::mutex mtx;
    static std::map<int, IntPolynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(mu); it != cache.end()) {
            return it->second;
        }
    }
    // Phi_{2mu} is palindromic of degree 2m. Dividing by y^m and writing
    // y^k + y^-k = D_k(y + 1/y) gives the polynomial in x = y + 1/y.
    const IntPolynomial phi = cyclotomic_polynomial(2 * mu);
    const int m = phi.degree() / 2;
    std::vector<IntCoeffs> dickson;
    dickson.push_back({BigInt(2)});
    dickson.push_back({BigInt(0), BigInt(1)});
    for (int k = 2; k <= m; ++k) {
        IntCoeffs next(static_cast<std::size_t>(k) + 1, BigInt(0));
        for (std::size_t i = 0; i < dickson[k - 1].size(); ++i) {
            next[i + 1] += dickson[k - 1][i];
        }
        for (std::size_t i = 0; i < dickson[k - 2].size(); ++i) {
            next[i] -= dickson[k - 2][i];
        }
        dickson.push_back(next);
    }
    IntCoeffs out(static_cast<std::size_t>(m) + 1, BigInt(0));
    out[0] = phi.coeffs[m];
    for (int k = 1; k <= m; ++k) {
        const BigInt &a = phi.coeffs[m + k];
        for (std::size_t i = 0; i < dickson[k].size(); ++i) {
            out[i] += a * dickson[k][i];
        }
    }
    trim_int(out);
    IntPolynomial result{out};
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(mu, result);
    return result;
}

FieldContext::FieldContext(int mu) : mu_(mu)
{
    const IntPolynomial m = minimal_polynomial(mu);
    for (const auto &c : m.coeffs) {
        modulus_.emplace_back(c);
    }
}

std::shared_ptr<const FieldContext> FieldContext::get(int mu)
{
    if (mu < 3) {
        throw domain_error("mu must be at least 3");
    }
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const FieldContext>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto &slot = cache[mu];
    if (!slot) {
        slot = std::make_shared<const FieldContext>(mu);
    }
    return slot;
}

FieldElement::FieldElement(std::shared_ptr<const FieldContext> ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        coeffs_.push_back(Rational(0));
    }
    if (ctx_ && static_cast<int>(coeffs_.size()) > ctx_->degree()) {
        // Reduce an over-long representative.
        std::vector<Rational> tmp = coeffs_;
        const auto &mod = ctx_->modulus();
        const std::size_t d = mod.size() - 1;
        for (std::size_t i = tmp.size(); i-- > d;) {
            const Rational c = tmp[i];
            if (c.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j <= d; ++j) {
                tmp[i - d + j] -= c * mod[j];
            }
        }
        tmp.resize(d);
        coeffs_ = std::move(tmp);
    }
    trim();
}

FieldElement FieldElement::varpi(int mu)
{
    auto ctx = FieldContext::get(mu);
    return FieldElement(ctx, {Rational(0), Rational(1)});
}

FieldElement FieldElement::constant(int mu, const Rational &v)
{
    return FieldElement(FieldContext::get(mu), {v});
}

std::vector<Rational> FieldElement::coeffs() const
{
    std::vector<Rational> out = coeffs_;
    const std::size_t d = ctx_ ? static_cast<std::size_t>(ctx_->degree()) : 1;
    out.resize(std::max<std::size_t>(d, 1), Rational(0));
    return out;
}

bool FieldElement::is_zero() const
{
    return coeffs_.size() == 1 && coeffs_[0].is_zero();
}

bool FieldElement::is_rational() const
{
    return coeffs_.size() == 1;
}

void FieldElement::trim()
{
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

void FieldElement::adopt(const FieldElement &o)
{
    if (!o.ctx_) {
        return;
    }
    if (!ctx_) {
        ctx_ = o.ctx_;
    } else if (ctx_->mu() != o.ctx_->mu()) {
        throw domain_error("field elements over different mu");
    }
}

FieldElement &FieldElement::operator+=(const FieldElement &o)
{
    adopt(o);
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

FieldElement &FieldElement::operator-=(const FieldElement &o)
{
    adopt(o);
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

FieldElement &FieldElement::operator*=(const FieldElement &o)
{
    adopt(o);
    if (is_rational() && o.is_rational()) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    const auto &mod = ctx_->modulus();
    const std::size_t d = mod.size() - 1;
    for (std::size_t i = prod.size(); i-- > d;) {
        const Rational c = prod[i];
        if (c.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= d; ++j) {
            prod[i - d + j] -= c * mod[j];
        }
    }
    if (prod.size() > d) {
        prod.resize(d);
    }
    coeffs_ = std::move(prod);
    if (coeffs_.empty()) {
        coeffs_.push_back(Rational(0));
    }
    trim();
    return *this;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero()) {
        throw division_error("inverse of zero field element");
    }
    if (is_rational()) {
        FieldElement r = *this;
        r.coeffs_[0] = coeffs_[0].inverse();
        return r;
    }
    // Extended Euclid in Q[x]: s*a + t*m = gcd, which is a nonzero constant.
    RatPoly r0 = ctx_->modulus();
    RatPoly r1 = coeffs_;
    RatPoly s0{Rational(0)};
    RatPoly s1{Rational(1)};
    while (!rat_is_zero(r1)) {
        RatPoly q, rem;
        rat_divmod(r0, r1, q, rem);
        r0 = std::move(r1);
        r1 = std::move(rem);
        RatPoly s2 = rat_sub(s0, rat_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) {
        throw domain_error("minimal polynomial is not irreducible");
    }
    const Rational g = r0[0].inverse();
    for (auto &c : s0) {
        c *= g;
    }
    return FieldElement(ctx_, s0);
}

FieldElement operator-(const FieldElement &a)
{
    FieldElement r = a;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

bool operator==(const FieldElement &a, const FieldElement &b)
{
    if (a.ctx_ && b.ctx_ && a.ctx_->mu() != b.ctx_->mu()) {
        return false;
    }
    return a.coeffs_ == b.coeffs_;
}

FieldElement pow(const FieldElement &base, unsigned exponent)
{
    FieldElement result(1);
    if (base.context()) {
        result = FieldElement::constant(base.mu(), Rational(1));
    }
    FieldElement b = base;
    while (exponent != 0) {
        if (exponent & 1u) {
            result *= b;
        }
        exponent >>= 1;
        if (exponent != 0) {
            b *= b;
        }
    }
    return result;
}

double FieldElement::to_double() const
{
    return static_cast<double>(to_long_double());
}

long double FieldElement::to_long_double() const
{
    MpfrValue out(192);
    mpfr_embed(out.v, mu(), coeffs_, 192);
    return mpfr_get_ld(out.v, MPFR_RNDN);
}

std::string FieldElement::embed_string(int digits) const
{
    if (digits < 1) {
        throw domain_error("precision must be at least one digit");
    }
    const mpfr_prec_t bits = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
    MpfrValue out(bits);
    mpfr_embed(out.v, mu(), coeffs_, bits);
    mpfr_exp_t exp = 0;
    char *raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), out.v, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    if (mpfr_zero_p(out.v)) {
        return "0";
    }
    std::string res;
    if (exp <= 0) {
        res = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
    } else if (static_cast<std::size_t>(exp) >= mant.size()) {
        res = mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
    } else {
        res = mant.substr(0, static_cast<std::size_t>(exp)) + "." + mant.substr(static_cast<std::size_t>(exp));
    }
    return sign + res;
}

std::string FieldElement::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational &c = coeffs_[i];
        if (c.is_zero() && !(coeffs_.size() == 1)) {
            continue;
        }
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << compact(mag);
            continue;
        }
        if (mag != Rational(1)) {
            os << compact(mag) << "*";
        }
        os << "varpi";
        if (i >= 2) {
            os << "^" << i;
        }
    }
    return os.str();
}

std::string FieldElement::latex() const
{
    auto frac = [](const Rational &q) {
        if (q.is_integer()) {
            return q.numerator().get_str();
        }
        return "\\frac{" + q.numerator().get_str() + "}{" + q.denominator().get_str() + "}";
    };
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational &c = coeffs_[i];
        if (c.is_zero() && coeffs_.size() != 1) {
            continue;
        }
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << frac(mag);
            continue;
        }
        if (mag != Rational(1)) {
            os << frac(mag);
        }
        os << "\\varpi";
        if (i >= 2) {
            os << "^{" << i << "}";
        }
    }
    return os.str();
}

std::string varpi_string(int mu, int digits)
{
    return FieldElement::varpi(mu).embed_string(digits);
}

long double varpi_value(int mu)
{
    return FieldElement::varpi(mu).to_long_double();
}

} // namespace hvf
