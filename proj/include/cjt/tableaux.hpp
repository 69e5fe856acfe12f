#pragma once

#include "cjt/diagram.hpp"
#include "cjt/hpaths.hpp"
#include "cjt/regions.hpp"

#include <nlohmann/json_fwd.hpp>

#include <vector>

namespace cjt {

/// A filling of a skew shape by letters of I; the weight factor of cell
/// (i,j) is z_{T(i,j), a+2(j-i)}.
struct Tableau {
    SkewDiagram shape;
    std::vector<std::vector<Letter>> rows;  // rows[i-1][j - mu_i - 1]

    Letter at(int i, int j) const { return rows.at(i - 1).at(j - shape.mu().part(i) - 1); }
    bool has(int i, int j) const { return shape.has_cell(i, j); }
    Monomial weight() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend bool operator<(const Tableau& a, const Tableau& b);
};

/// Text format: rows top-to-bottom joined by '/', entries comma-separated,
/// barred letters suffixed 'b' ("1,2,2 / 3,4,4 / 4b,4b,3b").
Tableau parse_tableau(std::string_view text, const SkewDiagram& shape);
std::string tableau_to_string(const Tableau& t);
nlohmann::json tableau_to_json(const Tableau& t);

/// Horizontal rule: rows weakly increase, except that (nbar, n) may also sit
/// side by side; the triples (nbar, nbar, n) and (nbar, n, n) are forbidden.
bool check_H(const Tableau& t, int n);

/// Vertical rule: columns strictly increase, except (n,n) with nbar directly
/// left of the lower n, and (nbar,nbar) with n directly right of the upper
/// nbar.
bool check_V(const Tableau& t, int n);

/// Row j of the tableau lists the h-labels of the E-steps of component j.
Tableau to_tableau(const PathTuple& p, const SkewDiagram& d, int n);

/// Inverse of to_tableau on HV-tableaux; throws on rule violations.
PathTuple from_tableau(const Tableau& t, int n);

/// Column-wise W/N staircases: lower e-path i starts at i - mu'_i, upper
/// e-path i ends at i - lambda'_i; E-steps of the tuple at nonzero heights
/// become W-steps at the same height in their column's pair. Height-0 steps
/// contribute no W-step.
struct EPathPair {
    int n = 1;
    int cols = 0;
    std::vector<std::vector<int>> lower_;  // gamma[i-1][h + n + 1], h in [-n-1, 0]
    std::vector<std::vector<int>> upper_;  // delta[i-1][h],        h in [0, n+1]

    int gamma(int i, int h) const { return lower_.at(i - 1).at(h + n + 1); }
    int delta(int i, int h) const { return upper_.at(i - 1).at(h); }
    int gamma_star(int i, int r) const { return gamma(i, -r) - 1 - r; }
    int delta_star(int i, int minus_r) const { return delta(i, -minus_r) + 1 - minus_r; }
};

EPathPair to_epaths(const PathTuple& p, const SkewDiagram& d, int n);

/// Connected components of II'-units (gamma*_i <= x < x+1 <= delta_i in S+,
/// mirrored in S-) that touch height 0 and contain no unit at height +-n.
/// Unit sets coincide with the II-regions of the projected half-pair; parity
/// is carried on that side, so parity_count is 0 here.
std::vector<Region> ii_prime_regions(const EPathPair& e);

/// A column configuration: an L-block of unbarred entries stacked over a
/// U-block of barred entries (with a fixed-size gap for type 2), satisfying
/// the complement-interleaving conditions.
struct LUConfiguration {
    int column = 1;
    int type = 1;     // 1 or 2
    int k = 1;
    int kprime = 0;   // type 2 only
    int l_top = 1;    // row of a_1
    int u_top = 1;    // row of bbar_t
    std::vector<int> a;        // a_1 < ... < a_s (values)
    std::vector<int> b;        // b_1 < ... < b_t (values; bbar_1 sits at the bottom)
    std::vector<Letter> ap;    // a'_1, ..., a'_t
    std::vector<Letter> bp;    // b'_1, ..., b'_s

    int s() const { return static_cast<int>(a.size()); }
    int t() const { return static_cast<int>(b.size()); }
    int a_row(int i) const { return l_top + i - 1; }          // row of a_i
    int b_row(int i) const { return u_top + t() - i; }        // row of bbar_i

    friend bool operator==(const LUConfiguration&, const LUConfiguration&) = default;
};

std::vector<LUConfiguration> find_LU_configurations(const Tableau& t, int n);

/// Path-side extra rule: the corresponding tuple has no odd II-region.
bool check_E(const Tableau& t, int n);

/// Tableau-side extra rule via LU-configurations: no equivalence class of
/// adjacent configurations that avoids boundary L/U attachments and has an
/// odd number of type-1 members.
bool check_E_prime(const Tableau& t, int n);

/// Two-column specialization: no type-1 configuration whose flanking-column
/// entries satisfy the c_k/d_k side conditions.
bool check_E2C(const Tableau& t, int n);

std::vector<Tableau> enumerate_hv_tableaux(const SkewDiagram& d, int n);
/// HV-tableaux passing the extra rule.
std::vector<Tableau> enumerate_tableaux(const SkewDiagram& d, int n);
Polynomial tab_sum(const SkewDiagram& d, int n);

}  // namespace cjt
