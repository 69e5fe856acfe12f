#pragma once

#include "cjt/diagram.hpp"
#include "cjt/weightring.hpp"

#include <vector>

namespace cjt {

/// Truncated power series over the weight ring in a variable X obeying the
/// twist law X z_{i,d} = z_{i,d-2} X: multiplying a degree-d term past a
/// coefficient shifts that coefficient's spectral offsets by -2d.
class ShiftedSeries {
public:
    ShiftedSeries(int n, int order) : n_(n), coeffs_(order + 1) {}
    static ShiftedSeries one(int n, int order);

    int rank() const { return n_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& coeff(int d) const { return coeffs_.at(d); }
    void set_coeff(int d, Polynomial p) { coeffs_.at(d) = std::move(p); }

private:
    int n_;
    std::vector<Polynomial> coeffs_;
};

ShiftedSeries series_mul(const ShiftedSeries& s, const ShiftedSeries& t, int order);

/// Multiplicative inverse of a series with constant term 1, truncated.
ShiftedSeries series_inverse(const ShiftedSeries& s, int order);

/// Substitutes X -> -X (degree-d coefficient picks up (-1)^d).
ShiftedSeries series_negate_x(const ShiftedSeries& s);

/// Ordered product (1+z_{1,0}X)...(1+z_{n,0}X) (1 - z_{n,0}X z_{nbar,0}X)
/// (1+z_{nbar,0}X)...(1+z_{1bar,0}X), truncated at `order`.
ShiftedSeries E_series(int n, int order);

/// Ordered product (1-z_{1bar,0}X)^-1...(1-z_{nbar,0}X)^-1
/// (1 - z_{n,0}X z_{nbar,0}X)^-1 (1-z_{n,0}X)^-1...(1-z_{1,0}X)^-1.
ShiftedSeries H_series(int n, int order);

/// Coefficient of X^r in H, with all offsets shifted by d (base point a+d).
/// Zero for r < 0.
Polynomial h_coeff(int n, int r, int d);

/// Coefficient of X^r in E shifted by d; zero for r < 0, r = n+1, r > 2n+2.
Polynomial e_coeff(int n, int r, int d);

/// Raw series coefficient without the r = n+1 / r > 2n+2 vanishing rules.
Polynomial e_coeff_raw(int n, int r, int d);

/// H(X)E(-X) = E(-X)H(X) = 1 through X^order, under psi.
bool verify_HE(int n, int order);

/// e_{2n+2-i,a} = -e_{i,a-2n+2i-2} under psi, for all 0 <= i <= 2n+2.
bool verify_pseudo_antisym(int n);

/// Jacobi-Trudi determinant det(h_{lambda_i - mu_j - i + j, a + 2(lambda_i - i)}).
Polynomial jt_det_h(const SkewDiagram& d, int n);

/// Dual form det(e_{lambda'_i - mu'_j - i + j, a - 2(mu'_j - j + 1)}).
Polynomial jt_det_e(const SkewDiagram& d, int n);

}  // namespace cjt
