#include "cjt/hpaths.hpp"

#include "cjt/genseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cjt {

Path::Path(int n, std::vector<int> arrival) : n_(n), pos_(std::move(arrival)) {
    if (n_ < 1) throw std::invalid_argument("rank must be >= 1");
    if (static_cast<int>(pos_.size()) != 2 * n_ + 3)
        throw std::invalid_argument("arrival profile must cover heights -n-1..n+1");
    for (size_t k = 1; k < pos_.size(); ++k)
        if (pos_[k] < pos_[k - 1]) throw std::invalid_argument("profile must be monotone");
    if (at(-n_) != at(-n_ - 1))
        throw std::invalid_argument("E-steps may not occur at height -n-1");
    if ((at(1) - at(0)) % 2 != 0)
        throw std::invalid_argument("the number of E-steps at height 0 must be even");
}

std::vector<LabeledStep> Path::labeled_steps() const {
    std::vector<LabeledStep> out;
    for (int h = -n_; h <= n_; ++h) {
        int pos_in_run = 0;
        for (int x = at(h); x < leave(h); ++x, ++pos_in_run) {
            Letter letter;
            if (h < 0) {
                letter = Letter{n_ + 1 + h, false};
            } else if (h > 0) {
                letter = Letter{n_ + 1 - h, true};
            } else {
                // height-0 labels alternate nbar, n, nbar, n, ...
                letter = (pos_in_run % 2 == 0) ? Letter{n_, true} : Letter{n_, false};
            }
            out.push_back({h, x, letter, 2 * x});
        }
    }
    return out;
}

Monomial Path::weight() const {
    Monomial m = Monomial::one();
    for (const LabeledStep& s : labeled_steps()) m *= Monomial::var({s.letter, s.shift});
    return m;
}

std::vector<Path> enumerate_paths(int n, int start_x, int end_x) {
    std::vector<Path> out;
    const int r = end_x - start_x;
    if (r < 0) return out;
    // choose the E-step count at each height -n..n, even at height 0
    std::vector<int> counts(2 * n + 1, 0);
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == 2 * n + 1) {
            if (remaining != 0) return;
            std::vector<int> pos(2 * n + 3);
            pos[0] = start_x;
            pos[1] = start_x;  // no E at the bottom
            for (int k = 0; k < 2 * n + 1; ++k) pos[k + 2] = pos[k + 1] + counts[k];
            out.emplace_back(n, std::move(pos));
            return;
        }
        const bool is_height0 = (idx == n);
        for (int c = 0; c <= remaining; ++c) {
            if (is_height0 && c % 2 != 0) continue;
            counts[idx] = c;
            self(self, idx + 1, remaining - c);
        }
        counts[idx] = 0;
    };
    rec(rec, 0, r);
    std::sort(out.begin(), out.end());
    return out;
}

Intersection classify_intersection(const Path& p, const Path& q) {
    if (p.rank() != q.rank()) throw std::invalid_argument("rank mismatch");
    const int n = p.rank();
    bool meet_zero = false, meet_elsewhere = false;
    for (int h = -n - 1; h <= n + 1; ++h) {
        const int lo = std::max(p.at(h), q.at(h));
        const int hi = std::min(p.leave(h), q.leave(h));
        if (lo <= hi) (h == 0 ? meet_zero : meet_elsewhere) = true;
    }
    if (!meet_zero && !meet_elsewhere) return Intersection::disjoint;
    if (!meet_elsewhere && (p.at(0) - q.at(0)) % 2 != 0) return Intersection::special;
    return Intersection::ordinary;
}

Monomial PathTuple::weight() const {
    Monomial m = Monomial::one();
    for (const Path& p : paths) m *= p.weight();
    return m;
}

std::vector<int> start_points(const SkewDiagram& d) {
    std::vector<int> u;
    for (int i = 1; i <= d.rows(); ++i) u.push_back(d.mu().part(i) + 1 - i);
    return u;
}

std::vector<int> end_points(const SkewDiagram& d) {
    std::vector<int> v;
    for (int i = 1; i <= d.rows(); ++i) v.push_back(d.lambda().part(i) + 1 - i);
    return v;
}

namespace {

int perm_sign(const std::vector<int>& sigma) {
    int sign = 1;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) sign = -sign;
    return sign;
}

// Tuples for one permutation, pruned by an intersection predicate against
// already-placed components. adj_only restricts the check to adjacent pairs.
void tuples_for_sigma(const SkewDiagram& d, int n, const std::vector<int>& sigma, bool adj_only,
                      std::vector<PathTuple>& out) {
    const int l = d.rows();
    const auto u = start_points(d), v = end_points(d);
    std::vector<std::vector<Path>> choices;
    for (int i = 0; i < l; ++i) {
        choices.push_back(enumerate_paths(n, u[i], v[sigma[i]]));
        if (choices.back().empty()) return;
    }
    const int sign = perm_sign(sigma);
    std::vector<const Path*> picked;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == l) {
            PathTuple t;
            for (const Path* p : picked) t.paths.push_back(*p);
            t.sigma = sigma;
            t.sign = sign;
            out.push_back(std::move(t));
            return;
        }
        for (const Path& p : choices[i]) {
            bool ok = true;
            for (int j = adj_only ? std::max(0, i - 1) : 0; j < i && ok; ++j) {
                if (adj_only && j != i - 1) continue;
                if (classify_intersection(*picked[j], p) == Intersection::ordinary) ok = false;
            }
            if (!ok) continue;
            picked.push_back(&p);
            self(self, i + 1);
            picked.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<PathTuple> enumerate_p1(const SkewDiagram& d, int n) {
    const int l = d.rows();
    std::vector<PathTuple> out;
    std::vector<int> sigma(l);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        tuples_for_sigma(d, n, sigma, /*adj_only=*/false, out);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<PathTuple> enumerate_hv_tuples(const SkewDiagram& d, int n) {
    const int l = d.rows();
    std::vector<PathTuple> out;
    std::vector<int> sigma(l);
    std::iota(sigma.begin(), sigma.end(), 0);
    tuples_for_sigma(d, n, sigma, /*adj_only=*/true, out);
    return out;
}

Polynomial signed_sum(const SkewDiagram& d, int n) {
    Polynomial acc;
    for (const PathTuple& t : enumerate_p1(d, n)) acc.add_term(t.weight(), t.sign);
    return acc;
}

Polynomial weight_sum(const std::vector<PathTuple>& tuples) {
    Polynomial acc;
    for (const PathTuple& t : tuples) acc.add_term(t.weight(), 1);
    return acc;
}

bool cross_check_h(int n, int r, int k) {
    if (r < 0) throw std::invalid_argument("r must be >= 0");
    Polynomial path_sum;
    for (const Path& p : enumerate_paths(n, k, k + r)) path_sum.add_term(p.weight(), 1);
    return psi(path_sum, n) == psi(h_coeff(n, r, 2 * k + 2 * r - 2), n);
}

}  // namespace cjt
