#pragma once

#include "cjt/diagram.hpp"
#include "cjt/hpaths.hpp"

#include <vector>

namespace cjt {

inline constexpr int kInf = 1 << 28;

/// A pair of l-tuples of lower and upper paths, stored as profiles.
/// lower(i,h) is the leftmost position of lower path i at height h in
/// [-n-1, 0]; upper(i,h) the rightmost position of upper path i at height h
/// in [0, n+1]. Lower paths have no E-step at heights 0 and -n-1, upper
/// paths none at 0 and n+1.
struct HalfPair {
    int n = 1;
    int l = 0;
    std::vector<std::vector<int>> lower_;  // [i][h + n + 1], i 0-based
    std::vector<std::vector<int>> upper_;  // [i][h]

    int lower(int i, int h) const { return lower_.at(i - 1).at(h + n + 1); }
    int upper(int i, int h) const { return upper_.at(i - 1).at(h); }

    friend bool operator==(const HalfPair&, const HalfPair&) = default;
};

/// Splits each path of the tuple at height 0, dropping the height-0 E-steps.
/// Lower path i comes from component i; upper path sigma(i) from component i.
HalfPair project(const PathTuple& t);

/// Dual values. alpha_star(i,r) = lower(i-r, -r) - 1 - r when i-r >= 1,
/// +inf otherwise; beta_star(i,-r) = upper(i+r, r) + 1 + r when i+r <= l,
/// -inf otherwise; both +-inf for i outside 1..l.
int alpha_star(const HalfPair& hp, int i, int r);
int beta_star(const HalfPair& hp, int i, int minus_r);
/// Profile accessors with the same out-of-range sentinels.
int alpha_at(const HalfPair& hp, int i, int h);
int beta_at(const HalfPair& hp, int i, int h);

/// The full dual pair (alpha*; beta*): alpha_star[i-1][r] and
/// beta_star[i-1][r] for r = 0..n, with +-kInf sentinels.
struct HalfPairDual {
    std::vector<std::vector<int>> alpha_star;  // upper-path data, heights 0..n
    std::vector<std::vector<int>> beta_star;   // lower-path data, heights -0..-n
};
HalfPairDual dual_half(const HalfPair& hp);

/// A unit square [x, x+1] x [y, y+1]; S+ when y >= 0 (height y), S- when
/// y < 0 (height -(y+1) with the sign flipped, i.e. ht = y+1 <= 0).
struct Unit {
    int x = 0;
    int y = 0;

    bool in_upper_strip() const { return y >= 0; }
    int ht() const { return y >= 0 ? y : -(y + 1); }  // the r in ht = +-r

    friend bool operator==(const Unit&, const Unit&) = default;
    friend auto operator<=>(const Unit& a, const Unit& b) {
        return std::pair(a.y, a.x) <=> std::pair(b.y, b.x);
    }
};

/// Reflection pairing S+ and S- units; an involution.
Unit unit_dual(Unit u);

/// Units sharing the upper-left or lower-right vertex (this includes edge
/// neighbours but not the upper-right/lower-left diagonals).
bool units_adjacent(Unit a, Unit b);

enum class UnitClass { none, I, II, boundary_II };

/// Witness indices i in 0..l for the I- (or II-) unit condition; boundary
/// flag for II per the strip-dependent index ranges and r = n.
std::vector<int> unit_witnesses_I(const HalfPair& hp, Unit u);
std::vector<int> unit_witnesses_II(const HalfPair& hp, Unit u);
bool unit_is_boundary_II(const HalfPair& hp, Unit u);

UnitClass classify_unit(const HalfPair& hp, Unit u);

/// Generalized classification with index offset k (k = 1 is classify_unit).
UnitClass classify_unit_k(const HalfPair& hp, Unit u, int k);

struct Region {
    bool kind_II = false;
    int parity_count = 0;            // n(V)
    std::vector<Unit> units;         // sorted
    bool odd() const { return parity_count % 2 != 0; }

    friend bool operator==(const Region&, const Region&) = default;
};

/// All I- and II-regions: connected components of I-units (resp. II-units)
/// under adjacency that contain a height-0 unit; II-regions additionally
/// contain no boundary II-unit. Each region carries n(V), the number of even
/// overlaps (I) or even holes (II) among the pairs (alpha_i, beta_{i+1})
/// that meet the region at height 0.
std::vector<Region> compute_regions(const HalfPair& hp);

/// The expansion/folding deformation: inside V, lower path i takes the
/// profile of beta*_{i+1} and upper path i the profile of alpha*_{i-1}.
/// Swaps the I/II character of V and is an involution.
HalfPair epsilon(const HalfPair& hp, const Region& v);

/// P1 tuples with no odd I- or II-region. Requires the positivity condition.
std::vector<PathTuple> enumerate_p2(const SkewDiagram& d, int n);

/// Identity-permutation tuples with no ordinarily intersecting adjacent pair
/// and no odd II-region. Requires the positivity condition.
std::vector<PathTuple> enumerate_p(const SkewDiagram& d, int n);

}  // namespace cjt
