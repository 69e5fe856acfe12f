#include "cjt/regions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cjt {

HalfPair project(const PathTuple& t) {
    HalfPair hp;
    hp.l = static_cast<int>(t.paths.size());
    if (hp.l == 0) return hp;
    hp.n = t.paths[0].rank();
    const int n = hp.n;
    hp.lower_.resize(hp.l);
    hp.upper_.resize(hp.l);
    for (int i = 0; i < hp.l; ++i) {
        const Path& p = t.paths[i];
        std::vector<int> lo(n + 2);
        for (int h = -n - 1; h <= 0; ++h) lo[h + n + 1] = p.at(h);
        hp.lower_[i] = std::move(lo);
        std::vector<int> up(n + 2);
        for (int h = 0; h <= n + 1; ++h) up[h] = p.leave(h);
        hp.upper_[t.sigma[i]] = std::move(up);
    }
    return hp;
}

int alpha_at(const HalfPair& hp, int i, int h) {
    if (i < 1 || i > hp.l) return kInf;
    return hp.lower(i, h);
}

int beta_at(const HalfPair& hp, int i, int h) {
    if (i < 1 || i > hp.l) return -kInf;
    return hp.upper(i, h);
}

int alpha_star(const HalfPair& hp, int i, int r) {
    if (i < 1 || i > hp.l || i - r < 1) return kInf;
    return hp.lower(i - r, -r) - 1 - r;
}

int beta_star(const HalfPair& hp, int i, int minus_r) {
    const int r = -minus_r;
    if (i < 1 || i > hp.l || i + r > hp.l) return -kInf;
    return hp.upper(i + r, r) + 1 + r;
}

HalfPairDual dual_half(const HalfPair& hp) {
    HalfPairDual d;
    d.alpha_star.assign(hp.l, std::vector<int>(hp.n + 1));
    d.beta_star.assign(hp.l, std::vector<int>(hp.n + 1));
    for (int i = 1; i <= hp.l; ++i)
        for (int r = 0; r <= hp.n; ++r) {
            d.alpha_star[i - 1][r] = alpha_star(hp, i, r);
            d.beta_star[i - 1][r] = beta_star(hp, i, -r);
        }
    return d;
}

Unit unit_dual(Unit u) {
    if (u.y >= 0) return Unit{u.x + 1 + u.y, -u.y - 1};
    return Unit{u.x + u.y, -u.y - 1};
}

bool units_adjacent(Unit a, Unit b) {
    const int dx = b.x - a.x, dy = b.y - a.y;
    return (dx == -1 && dy == 0) || (dx == 1 && dy == 0) || (dx == 0 && dy == 1) ||
           (dx == 0 && dy == -1) || (dx == -1 && dy == 1) || (dx == 1 && dy == -1) ||
           (dx == 0 && dy == 0);
}

namespace {

// Witnesses with the generalized index offset k; k = 1 is the plain case.
std::vector<int> witnesses(const HalfPair& hp, Unit u, int k, bool want_II) {
    std::vector<int> out;
    const int r = u.ht();
    for (int i = 0; i <= hp.l; ++i) {
        int lo, hi;
        if (u.in_upper_strip()) {
            lo = want_II ? beta_at(hp, i + k, r) : alpha_star(hp, i, r);
            hi = want_II ? alpha_star(hp, i, r) : beta_at(hp, i + k, r);
        } else {
            lo = want_II ? beta_star(hp, i + k, -r) : alpha_at(hp, i, -r);
            hi = want_II ? alpha_at(hp, i, -r) : beta_star(hp, i + k, -r);
        }
        if (lo <= u.x && u.x + 1 <= hi) out.push_back(i);
    }
    return out;
}

bool is_boundary_witness(const HalfPair& hp, Unit u, int k, int i) {
    const int r = u.ht();
    if (r == hp.n) return true;
    if (u.in_upper_strip()) return i <= r || i >= hp.l + 1 - k;
    return i == 0 || i >= hp.l + 1 - k - r;
}

bool boundary_II_k(const HalfPair& hp, Unit u, int k) {
    for (int i : witnesses(hp, u, k, true))
        if (is_boundary_witness(hp, u, k, i)) return true;
    return false;
}

}  // namespace

std::vector<int> unit_witnesses_I(const HalfPair& hp, Unit u) {
    return witnesses(hp, u, 1, false);
}

std::vector<int> unit_witnesses_II(const HalfPair& hp, Unit u) {
    return witnesses(hp, u, 1, true);
}

bool unit_is_boundary_II(const HalfPair& hp, Unit u) { return boundary_II_k(hp, u, 1); }

UnitClass classify_unit_k(const HalfPair& hp, Unit u, int k) {
    if (k < 1 || (hp.l > 1 && k > hp.l - 1) || (hp.l <= 1 && k > 1))
        throw std::out_of_range("unit index offset k out of range");
    if (hp.l == 0) return UnitClass::none;
    if (!witnesses(hp, u, k, true).empty())
        return boundary_II_k(hp, u, k) ? UnitClass::boundary_II : UnitClass::II;
    if (!witnesses(hp, u, k, false).empty()) return UnitClass::I;
    return UnitClass::none;
}

UnitClass classify_unit(const HalfPair& hp, Unit u) { return classify_unit_k(hp, u, 1); }

namespace {

struct UnitInfo {
    std::vector<int> wit;
    bool boundary = false;
};

// Components of a unit set under adjacency, as sorted unit lists.
std::vector<std::vector<Unit>> components(const std::map<Unit, UnitInfo>& units) {
    std::vector<std::vector<Unit>> comps;
    std::set<Unit> seen;
    static constexpr int kOff[6][2] = {{-1, 0}, {1, 0}, {0, 1}, {0, -1}, {-1, 1}, {1, -1}};
    for (const auto& [u, info] : units) {
        if (seen.count(u)) continue;
        std::vector<Unit> comp, stack{u};
        seen.insert(u);
        while (!stack.empty()) {
            Unit cur = stack.back();
            stack.pop_back();
            comp.push_back(cur);
            for (const auto& off : kOff) {
                Unit nb{cur.x + off[0], cur.y + off[1]};
                if (units.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    stack.push_back(nb);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

bool is_height0(Unit u) { return u.y == 0 || u.y == -1; }

}  // namespace

std::vector<Region> compute_regions(const HalfPair& hp) {
    std::vector<Region> out;
    if (hp.l == 0) return out;
    const int n = hp.n;

    int xmin = kInf, xmax = -kInf;
    for (int i = 1; i <= hp.l; ++i) {
        for (int h = -n - 1; h <= 0; ++h) {
            xmin = std::min(xmin, hp.lower(i, h));
            xmax = std::max(xmax, hp.lower(i, h));
        }
        for (int h = 0; h <= n + 1; ++h) {
            xmin = std::min(xmin, hp.upper(i, h));
            xmax = std::max(xmax, hp.upper(i, h));
        }
    }
    // dual values stay within n+1 of the profiles; anything further out can
    // only be witnessed by sentinel indices, which are boundary cases
    const int lo = xmin - n - 3, hi = xmax + n + 3;

    std::map<Unit, UnitInfo> units_I, units_II;
    for (int y = -n - 1; y <= n; ++y) {
        for (int x = lo; x <= hi; ++x) {
            Unit u{x, y};
            auto wI = unit_witnesses_I(hp, u);
            if (!wI.empty()) units_I.emplace(u, UnitInfo{std::move(wI), false});
            auto wII = unit_witnesses_II(hp, u);
            if (!wII.empty()) {
                bool bd = unit_is_boundary_II(hp, u) || x == lo || x == hi;
                units_II.emplace(u, UnitInfo{std::move(wII), bd});
            }
        }
    }

    auto pair_gap = [&](int i) { return hp.lower(i, 0) - hp.upper(i + 1, 0); };

    auto emit = [&](const std::map<Unit, UnitInfo>& units, bool kind_II) {
        for (const auto& comp : components(units)) {
            bool has_zero = false, has_boundary = false;
            for (Unit u : comp) {
                if (is_height0(u)) has_zero = true;
                if (kind_II && units.at(u).boundary) has_boundary = true;
            }
            if (!has_zero || has_boundary) continue;
            // n(V): even overlaps (I) or even holes (II) meeting V at height 0
            int nv = 0;
            for (int i = 1; i <= hp.l - 1; ++i) {
                const int h = pair_gap(i);
                if (h % 2 != 0) continue;
                if (kind_II ? h <= 0 : h > 0) continue;
                bool meets = false;
                for (Unit u : comp) {
                    if (!is_height0(u)) continue;
                    const auto& w = units.at(u).wit;
                    if (std::find(w.begin(), w.end(), i) != w.end()) {
                        meets = true;
                        break;
                    }
                }
                if (meets) ++nv;
            }
            out.push_back(Region{kind_II, nv, comp});
        }
    };
    emit(units_I, false);
    emit(units_II, true);
    return out;
}

HalfPair epsilon(const HalfPair& hp, const Region& v) {
    {
        const auto regs = compute_regions(hp);
        if (std::find(regs.begin(), regs.end(), v) == regs.end())
            throw std::invalid_argument("not a region of this pair");
    }
    HalfPair out = hp;
    const bool kind_II = v.kind_II;
    for (Unit u : v.units) {
        const int r = u.ht();
        const auto wit = witnesses(hp, u, 1, kind_II);
        if (u.in_upper_strip()) {
            // upper path i+1 takes the dual lower profile alpha*_i at height r
            for (int i : wit) {
                if (i + 1 < 1 || i + 1 > hp.l) continue;
                const int val = alpha_star(hp, i, r);
                if (val >= kInf / 2 || val <= -kInf / 2)
                    throw std::logic_error("expansion hit a sentinel value");
                out.upper_[i + 1 - 1][r] = val;
            }
        } else {
            for (int i : wit) {
                if (i < 1 || i > hp.l) continue;
                const int val = beta_star(hp, i + 1, -r);
                if (val >= kInf / 2 || val <= -kInf / 2)
                    throw std::logic_error("folding hit a sentinel value");
                out.lower_[i - 1][-r + hp.n + 1] = val;
            }
        }
    }
    for (int i = 1; i <= out.l; ++i) {
        for (int h = -out.n - 1; h < 0; ++h)
            if (out.lower(i, h) > out.lower(i, h + 1))
                throw std::logic_error("deformed lower profile not monotone");
        if (out.lower(i, -out.n) != out.lower(i, -out.n - 1))
            throw std::logic_error("deformed lower profile has a bottom E-step");
        for (int h = 0; h < out.n + 1; ++h)
            if (out.upper(i, h) > out.upper(i, h + 1))
                throw std::logic_error("deformed upper profile not monotone");
    }
    return out;
}

namespace {

bool has_odd_region(const std::vector<Region>& regs, bool ii_only) {
    for (const Region& r : regs) {
        if (ii_only && !r.kind_II) continue;
        if (r.odd()) return true;
    }
    return false;
}

}  // namespace

std::vector<PathTuple> enumerate_p2(const SkewDiagram& d, int n) {
    if (!positivity_holds(d, n))
        throw PositivityError("the positive-sum theorems require depth <= n+1");
    std::vector<PathTuple> out;
    for (PathTuple& t : enumerate_p1(d, n)) {
        if (!has_odd_region(compute_regions(project(t)), false)) out.push_back(std::move(t));
    }
    return out;
}

std::vector<PathTuple> enumerate_p(const SkewDiagram& d, int n) {
    if (!positivity_holds(d, n))
        throw PositivityError("the positive-sum theorems require depth <= n+1");
    std::vector<PathTuple> out;
    for (PathTuple& t : enumerate_hv_tuples(d, n)) {
        if (!has_odd_region(compute_regions(project(t)), true)) out.push_back(std::move(t));
    }
    return out;
}

}  // namespace cjt
