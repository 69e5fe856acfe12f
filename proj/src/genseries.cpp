#include "cjt/genseries.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cjt {

ShiftedSeries ShiftedSeries::one(int n, int order) {
    ShiftedSeries s(n, order);
    s.set_coeff(0, Polynomial::one());
    return s;
}

ShiftedSeries series_mul(const ShiftedSeries& s, const ShiftedSeries& t, int order) {
    if (s.rank() != t.rank()) throw std::invalid_argument("series rank mismatch");
    ShiftedSeries out(s.rank(), order);
    for (int m = 0; m <= order; ++m) {
        Polynomial acc;
        for (int d = 0; d <= m && d <= s.order(); ++d) {
            const int e = m - d;
            if (e > t.order()) continue;
            if (s.coeff(d).is_zero() || t.coeff(e).is_zero()) continue;
            acc += s.coeff(d) * t.coeff(e).shifted(-2 * d);
        }
        out.set_coeff(m, std::move(acc));
    }
    return out;
}

ShiftedSeries series_inverse(const ShiftedSeries& s, int order) {
    if (!(s.coeff(0) == Polynomial::one()))
        throw std::invalid_argument("series_inverse needs constant term 1");
    ShiftedSeries out(s.rank(), order);
    out.set_coeff(0, Polynomial::one());
    for (int m = 1; m <= order; ++m) {
        Polynomial acc;
        for (int d = 1; d <= m && d <= s.order(); ++d) {
            if (s.coeff(d).is_zero()) continue;
            acc += s.coeff(d) * out.coeff(m - d).shifted(-2 * d);
        }
        out.set_coeff(m, -acc);
    }
    return out;
}

ShiftedSeries series_negate_x(const ShiftedSeries& s) {
    ShiftedSeries out(s.rank(), s.order());
    for (int d = 0; d <= s.order(); ++d) {
        out.set_coeff(d, (d % 2 == 0) ? s.coeff(d) : -s.coeff(d));
    }
    return out;
}

namespace {

ShiftedSeries linear_factor(int n, int order, const Letter& letter, int sign) {
    ShiftedSeries f(n, std::min(order, 1));
    f.set_coeff(0, Polynomial::one());
    if (order >= 1)
        f.set_coeff(1, Polynomial::monomial(Monomial::var({letter, 0}), sign));
    return f;
}

// 1 - z_{n,0} z_{nbar,-2} X^2, the resolved form of 1 - z_{n,0}X z_{nbar,0}X.
ShiftedSeries middle_factor(int n, int order) {
    ShiftedSeries f(n, std::min(order, 2));
    f.set_coeff(0, Polynomial::one());
    if (order >= 2) {
        Monomial m = Monomial::var({{n, false}, 0}) * Monomial::var({{n, true}, -2});
        f.set_coeff(2, Polynomial::monomial(m, -1));
    }
    return f;
}

}  // namespace

ShiftedSeries E_series(int n, int order) {
    ShiftedSeries acc = ShiftedSeries::one(n, order);
    for (int k = 1; k <= n; ++k)
        acc = series_mul(acc, linear_factor(n, order, {k, false}, +1), order);
    acc = series_mul(acc, middle_factor(n, order), order);
    for (int k = n; k >= 1; --k)
        acc = series_mul(acc, linear_factor(n, order, {k, true}, +1), order);
    return acc;
}

ShiftedSeries H_series(int n, int order) {
    ShiftedSeries acc = ShiftedSeries::one(n, order);
    for (int k = 1; k <= n; ++k)
        acc = series_mul(acc, series_inverse(linear_factor(n, order, {k, true}, -1), order), order);
    acc = series_mul(acc, series_inverse(middle_factor(n, order), order), order);
    for (int k = n; k >= 1; --k)
        acc = series_mul(acc, series_inverse(linear_factor(n, order, {k, false}, -1), order), order);
    return acc;
}

Polynomial h_coeff(int n, int r, int d) {
    if (r < 0) return Polynomial::zero();
    return H_series(n, r).coeff(r).shifted(d);
}

Polynomial e_coeff_raw(int n, int r, int d) {
    if (r < 0 || r > 2 * n + 2) return Polynomial::zero();
    return E_series(n, r).coeff(r).shifted(d);
}

Polynomial e_coeff(int n, int r, int d) {
    if (r < 0 || r == n + 1 || r > 2 * n + 2) return Polynomial::zero();
    return e_coeff_raw(n, r, d);
}

bool verify_HE(int n, int order) {
    const ShiftedSeries h = H_series(n, order);
    const ShiftedSeries e_neg = series_negate_x(E_series(n, order));
    for (const auto* prod : {&h, &e_neg}) {
        const ShiftedSeries& a = (prod == &h) ? h : e_neg;
        const ShiftedSeries& b = (prod == &h) ? e_neg : h;
        ShiftedSeries p = series_mul(a, b, order);
        if (!(psi(p.coeff(0), n) == FreeLaurent::one())) return false;
        for (int r = 1; r <= order; ++r)
            if (!psi(p.coeff(r), n).is_zero()) return false;
    }
    return true;
}

bool verify_pseudo_antisym(int n) {
    for (int i = 0; i <= 2 * n + 2; ++i) {
        Polynomial lhs = e_coeff(n, 2 * n + 2 - i, 0);
        Polynomial rhs = -e_coeff(n, i, -2 * n + 2 * i - 2);
        if (!(psi(lhs, n) == psi(rhs, n))) return false;
    }
    return true;
}

namespace {

// Cofactor expansion over the first undetermined row, memoized on the set of
// available columns. Matrix sizes stay small at desk scale.
Polynomial det_memo(const std::vector<std::vector<Polynomial>>& m, unsigned mask,
                    std::map<unsigned, Polynomial>& memo) {
    const int l = static_cast<int>(m.size());
    if (mask == 0) return Polynomial::one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int row = l - __builtin_popcount(mask);
    Polynomial acc;
    int sign = 1;
    for (int j = 0; j < l; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!m[row][j].is_zero()) {
            Polynomial sub = det_memo(m, mask & ~(1u << j), memo);
            Polynomial term = m[row][j] * sub;
            acc += (sign > 0) ? term : -term;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    const int l = static_cast<int>(m.size());
    if (l == 0) return Polynomial::one();
    std::map<unsigned, Polynomial> memo;
    return det_memo(m, (1u << l) - 1, memo);
}

}  // namespace

Polynomial jt_det_h(const SkewDiagram& d, int n) {
    const Partition& lam = d.lambda();
    const Partition& mu = d.mu();
    const int l = lam.length();
    if (l == 0) return Polynomial::one();
    int max_r = 0;
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            max_r = std::max(max_r, lam.part(i) - mu.part(j) - i + j);
    const ShiftedSeries hs = H_series(n, max_r);
    std::vector<std::vector<Polynomial>> m(l, std::vector<Polynomial>(l));
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            const int r = lam.part(i) - mu.part(j) - i + j;
            if (r >= 0) m[i - 1][j - 1] = hs.coeff(r).shifted(2 * (lam.part(i) - i));
        }
    }
    return determinant(m);
}

Polynomial jt_det_e(const SkewDiagram& d, int n) {
    const Partition lc = d.lambda().conjugate();
    const Partition mc = d.mu().conjugate();
    const int l = lc.length();
    if (l == 0) return Polynomial::one();
    const ShiftedSeries es = E_series(n, 2 * n + 2);
    std::vector<std::vector<Polynomial>> m(l, std::vector<Polynomial>(l));
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            const int r = lc.part(i) - mc.part(j) - i + j;
            if (r >= 0 && r != n + 1 && r <= 2 * n + 2)
                m[i - 1][j - 1] = es.coeff(r).shifted(-2 * (mc.part(j) - j + 1));
        }
    }
    return determinant(m);
}

}  // namespace cjt
