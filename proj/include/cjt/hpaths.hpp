#pragma once

#include "cjt/diagram.hpp"
#include "cjt/weightring.hpp"

#include <vector>

namespace cjt {

/// One E-step of a path, with its h-label.
struct LabeledStep {
    int height = 0;  // height of the step
    int x = 0;       // starting horizontal position
    Letter letter;
    int shift = 0;   // spectral offset 2x

    friend bool operator==(const LabeledStep&, const LabeledStep&) = default;
};

/// A lattice path from height -n-1 to height n+1 made of E- and N-steps,
/// with no E-step at heights +-(n+1) and an even number of E-steps at
/// height 0. Stored as the horizontal position at which the path first
/// reaches each height.
class Path {
public:
    Path(int n, std::vector<int> arrival);

    int rank() const { return n_; }
    /// x where the path first reaches height h, h in [-n-1, n+1].
    int at(int h) const { return pos_.at(h + n_ + 1); }
    /// x where the path leaves height h (after its E-steps there).
    int leave(int h) const { return h >= n_ + 1 ? at(h) : at(h + 1); }
    int start() const { return at(-n_ - 1); }
    int end() const { return at(n_ + 1); }

    /// E-steps bottom-to-top with h-labels: letter n+1+y below height 0,
    /// bar(n+1-y) above, and the alternating nbar, n, nbar, ... sequence at
    /// height 0; spectral offset 2x.
    std::vector<LabeledStep> labeled_steps() const;
    Monomial weight() const;

    friend bool operator==(const Path&, const Path&) = default;
    friend bool operator<(const Path& a, const Path& b) { return a.pos_ < b.pos_; }

private:
    int n_;
    std::vector<int> pos_;
};

/// All paths from (start_x, -n-1) to (end_x, n+1); empty when end_x < start_x.
std::vector<Path> enumerate_paths(int n, int start_x, int end_x);

enum class Intersection { disjoint, special, ordinary };

/// Two paths intersect when they share a lattice point. The intersection is
/// special when it is confined to height 0 and the leftmost height-0
/// positions differ by an odd amount; any other intersection is ordinary.
Intersection classify_intersection(const Path& p, const Path& q);

/// An l-tuple of paths; component i runs from u_{i+1} to v_{sigma[i]+1}
/// (0-based sigma).
struct PathTuple {
    std::vector<Path> paths;
    std::vector<int> sigma;
    int sign = 1;

    Monomial weight() const;
    friend bool operator==(const PathTuple&, const PathTuple&) = default;
};

/// Start points u_i = mu_i + 1 - i and end points v_i = lambda_i + 1 - i.
std::vector<int> start_points(const SkewDiagram& d);
std::vector<int> end_points(const SkewDiagram& d);

/// Tuples over all permutations with no ordinarily intersecting pair.
std::vector<PathTuple> enumerate_p1(const SkewDiagram& d, int n);

/// Identity-permutation tuples with no ordinarily intersecting adjacent pair.
std::vector<PathTuple> enumerate_hv_tuples(const SkewDiagram& d, int n);

/// Sum of sign * weight over enumerate_p1; psi-equal to the determinants.
Polynomial signed_sum(const SkewDiagram& d, int n);

Polynomial weight_sum(const std::vector<PathTuple>& tuples);

/// Path expansion of a single h coefficient: the weights of all paths
/// (k,-n-1) -> (k+r,n+1) sum to h_{r, a+2k+2r-2} under psi.
bool cross_check_h(int n, int r, int k);

}  // namespace cjt
