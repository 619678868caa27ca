#include "hvf/qseries.hpp"

namespace hvf
{

BigInt divisor_sigma(unsigned m, long n)
{
    if (n < 1) {
        throw domain_error("divisor_sigma needs n >= 1");
    }
    BigInt sum(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), m);
        sum += p;
        const long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), m);
            sum += p;
        }
    }
    return sum;
}

QSeries<Rational> extremal_D63(int trunc)
{
    if (trunc < 2) {
        throw domain_error("extremal_D63 needs truncation >= 2");
    }
    QSeries<Rational> s(trunc, 6);
    for (long n = 1; n <= trunc; ++n) {
        const BigInt v = BigInt(n) * divisor_sigma(3, n) - BigInt(n * n) * divisor_sigma(1, n);
        s[static_cast<int>(n)] = Rational(v, BigInt(6));
    }
    return s;
}

std::vector<Rational> express_in_depth_basis(const QSeries<Rational> &target,
                                             const std::vector<QSeries<Rational>> &basis, int matchN)
{
    const std::size_t k = basis.size();
    if (k == 0) {
        throw domain_error("empty basis");
    }
    if (matchN < static_cast<int>(k) - 1) {
        throw domain_error("matchN must cover at least as many orders as basis elements");
    }
    int common = target.trunc();
    for (const auto &b : basis) {
        common = std::min(common, b.trunc());
    }
    if (common < matchN) {
        throw domain_error("series truncation below matchN");
    }

    // Row-echelon rows: coefficients on the basis plus the right-hand side.
    struct Row {
        std::vector<Rational> a;
        Rational rhs;
        std::size_t lead;
    };
    std::vector<Row> rows;
    for (int n = 0; n <= matchN; ++n) {
        Row row{std::vector<Rational>(k), target[n], k};
        for (std::size_t i = 0; i < k; ++i) {
            row.a[i] = basis[i][n];
        }
        for (const auto &piv : rows) {
            const Rational f = row.a[piv.lead];
            if (f.is_zero()) {
                continue;
            }
            for (std::size_t i = 0; i < k; ++i) {
                row.a[i] -= f * piv.a[i];
            }
            row.rhs -= f * piv.rhs;
        }
        std::size_t lead = 0;
        while (lead < k && row.a[lead].is_zero()) {
            ++lead;
        }
        if (lead == k) {
            if (!row.rhs.is_zero()) {
                throw residual_error(n);
            }
            continue;
        }
        const Rational inv = row.a[lead].inverse();
        for (auto &v : row.a) {
            v *= inv;
        }
        row.rhs *= inv;
        row.lead = lead;
        // Keep reduced form: clear this column from earlier rows.
        for (auto &piv : rows) {
            const Rational f = piv.a[lead];
            if (f.is_zero()) {
                continue;
            }
            for (std::size_t i = 0; i < k; ++i) {
                piv.a[i] -= f * row.a[i];
            }
            piv.rhs -= f * row.rhs;
        }
        rows.push_back(std::move(row));
    }
    std::vector<Rational> c(k, Rational(0));
    for (const auto &row : rows) {
        c[row.lead] = row.rhs;
    }
    for (int n = 0; n <= common; ++n) {
        Rational acc(0);
        for (std::size_t i = 0; i < k; ++i) {
            acc += c[i] * basis[i][n];
        }
        if (acc != target[n]) {
            throw residual_error(n);
        }
    }
    return c;
}

} // namespace hvf
