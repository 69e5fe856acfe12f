#include "cjt/tableaux.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cjt {

Monomial Tableau::weight() const {
    Monomial m = Monomial::one();
    for (int i = 1; i <= shape.rows(); ++i)
        for (int j = shape.mu().part(i) + 1; j <= shape.lambda().part(i); ++j)
            m *= Monomial::var({at(i, j), 2 * (j - i)});
    return m;
}

bool operator<(const Tableau& a, const Tableau& b) {
    auto key = [](const Tableau& t) {
        std::vector<std::pair<int, int>> k;
        for (const auto& row : t.rows)
            for (Letter e : row) k.push_back(e.order_key());
        return k;
    };
    return std::tuple(a.shape, key(a)) < std::tuple(b.shape, key(b));
}

Tableau parse_tableau(std::string_view text, const SkewDiagram& shape) {
    std::vector<std::vector<Letter>> rows;
    std::vector<Letter> cur;
    std::string buf;
    auto flush_entry = [&]() {
        if (buf.empty()) throw std::invalid_argument("empty tableau entry");
        cur.push_back(Letter::parse(buf));
        buf.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        if (c == ',') {
            flush_entry();
        } else if (c == '/') {
            if (!buf.empty()) flush_entry();
            rows.push_back(std::move(cur));
            cur.clear();
        } else {
            buf.push_back(c);
        }
    }
    if (!buf.empty()) flush_entry();
    if (!cur.empty() || rows.empty()) rows.push_back(std::move(cur));
    if (static_cast<int>(rows.size()) != shape.rows())
        throw std::invalid_argument("tableau row count does not match the shape");
    for (int i = 1; i <= shape.rows(); ++i) {
        const int want = shape.lambda().part(i) - shape.mu().part(i);
        if (static_cast<int>(rows[i - 1].size()) != want)
            throw std::invalid_argument("tableau row length does not match the shape");
    }
    return Tableau{shape, std::move(rows)};
}

std::string tableau_to_string(const Tableau& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (i) os << " / ";
        for (size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j) os << ",";
            os << t.rows[i][j].str();
        }
    }
    return os.str();
}

nlohmann::json tableau_to_json(const Tableau& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (Letter e : row) r.push_back(e.json_str());
        rows.push_back(r);
    }
    return nlohmann::json{{"lambda", t.shape.lambda().parts()},
                          {"mu", t.shape.mu().parts()},
                          {"rows", rows}};
}

bool check_H(const Tableau& t, int n) {
    const Letter nb{n, true}, nu{n, false};
    for (int i = 1; i <= t.shape.rows(); ++i) {
        const int jlo = t.shape.mu().part(i) + 1, jhi = t.shape.lambda().part(i);
        for (int j = jlo; j <= jhi; ++j) {
            if (j + 1 <= jhi) {
                const Letter x = t.at(i, j), y = t.at(i, j + 1);
                if (!(x <= y) && !(x == nb && y == nu)) return false;
            }
            if (j - 1 >= jlo && j + 1 <= jhi) {
                const Letter x = t.at(i, j - 1), y = t.at(i, j), z = t.at(i, j + 1);
                if (x == nb && z == nu && (y == nb || y == nu)) return false;
            }
        }
    }
    return true;
}

bool check_V(const Tableau& t, int n) {
    const Letter nb{n, true}, nu{n, false};
    for (int i = 1; i < t.shape.rows(); ++i) {
        for (int j = 1; j <= t.shape.cols(); ++j) {
            if (!t.has(i, j) || !t.has(i + 1, j)) continue;
            const Letter x = t.at(i, j), y = t.at(i + 1, j);
            if (x < y) continue;
            if (x == nu && y == nu && t.has(i + 1, j - 1) && t.at(i + 1, j - 1) == nb) continue;
            if (x == nb && y == nb && t.has(i, j + 1) && t.at(i, j + 1) == nu) continue;
            return false;
        }
    }
    return true;
}

Tableau to_tableau(const PathTuple& p, const SkewDiagram& d, int n) {
    for (size_t i = 0; i < p.sigma.size(); ++i)
        if (p.sigma[i] != static_cast<int>(i))
            throw std::invalid_argument("only identity-permutation tuples map to tableaux");
    std::vector<std::vector<Letter>> rows;
    for (const Path& path : p.paths) {
        std::vector<Letter> row;
        for (const LabeledStep& s : path.labeled_steps()) row.push_back(s.letter);
        rows.push_back(std::move(row));
    }
    Tableau t{d, std::move(rows)};
    for (int i = 1; i <= d.rows(); ++i)
        if (static_cast<int>(t.rows[i - 1].size()) != d.lambda().part(i) - d.mu().part(i))
            throw std::invalid_argument("tuple does not fit the shape");
    (void)n;
    return t;
}

namespace {

// Heights of the E-steps encoded by one tableau row. Entries below n map to
// negative heights and barred entries above nbar to positive ones; the
// mixed n/nbar block in the middle is parsed so that height-0 runs are the
// even-length alternating nbar, n, ..., n factors.
std::vector<int> row_step_heights(const std::vector<Letter>& row, int n) {
    const int m = static_cast<int>(row.size());
    std::vector<int> h(m, 0);
    int run_lo = m, run_hi = -1;
    for (int i = 0; i < m; ++i) {
        const Letter e = row[i];
        if (e.index < 1 || e.index > n) throw std::invalid_argument("letter outside 1..n");
        if (e.index < n) {
            h[i] = e.barred ? (n + 1 - e.index) : (e.index - n - 1);
        } else {
            run_lo = std::min(run_lo, i);
            run_hi = std::max(run_hi, i);
        }
    }
    if (run_hi >= 0) {
        for (int i = run_lo; i <= run_hi; ++i)
            if (row[i].index != n) throw std::invalid_argument("n-run is not contiguous");
        int first_bar = -1, last_plain = -1;
        for (int i = run_lo; i <= run_hi; ++i) {
            if (row[i].barred && first_bar < 0) first_bar = i;
            if (!row[i].barred) last_plain = i;
        }
        int block_lo = m, block_hi = -1;
        if (first_bar >= 0 && last_plain > first_bar) {
            block_lo = first_bar;
            block_hi = last_plain;
            for (int i = block_lo; i <= block_hi; ++i) {
                const bool want_barred = ((i - block_lo) % 2 == 0);
                if (row[i].barred != want_barred)
                    throw std::invalid_argument("height-0 block does not alternate");
            }
        }
        for (int i = run_lo; i <= run_hi; ++i) {
            if (i >= block_lo && i <= block_hi) {
                h[i] = 0;
            } else {
                h[i] = row[i].barred ? 1 : -1;
                if (!row[i].barred && i > block_hi && block_hi >= 0)
                    throw std::invalid_argument("stray n after the height-0 block");
            }
        }
    }
    for (int i = 0; i + 1 < m; ++i)
        if (h[i] > h[i + 1]) throw std::invalid_argument("step heights not monotone");
    return h;
}

Path path_from_heights(int n, int start_x, const std::vector<int>& heights) {
    std::vector<int> counts(2 * n + 3, 0);
    for (int h : heights) counts[h + n + 1] += 1;
    std::vector<int> pos(2 * n + 3, start_x);
    for (int k = 1; k < 2 * n + 3; ++k) pos[k] = pos[k - 1] + counts[k - 1];
    return Path(n, pos);
}

}  // namespace

PathTuple from_tableau(const Tableau& t, int n) {
    if (!check_H(t, n)) throw std::invalid_argument("tableau violates the horizontal rule");
    if (!check_V(t, n)) throw std::invalid_argument("tableau violates the vertical rule");
    const SkewDiagram& d = t.shape;
    PathTuple out;
    for (int i = 1; i <= d.rows(); ++i) {
        const auto heights = row_step_heights(t.rows[i - 1], n);
        out.paths.push_back(path_from_heights(n, d.mu().part(i) + 1 - i, heights));
        out.sigma.push_back(i - 1);
    }
    out.sign = 1;
    if (d.rows() > 0) {
        Tableau back = to_tableau(out, d, n);
        if (!(back.rows == t.rows)) throw std::invalid_argument("tableau does not encode a path");
        for (size_t i = 0; i + 1 < out.paths.size(); ++i)
            if (classify_intersection(out.paths[i], out.paths[i + 1]) == Intersection::ordinary)
                throw std::invalid_argument("adjacent components intersect ordinarily");
    }
    return out;
}

EPathPair to_epaths(const PathTuple& p, const SkewDiagram& d, int n) {
    EPathPair e;
    e.n = n;
    e.cols = d.cols();
    const Partition lc = d.lambda().conjugate(), mc = d.mu().conjugate();
    // W-step heights per column
    std::vector<std::vector<int>> wsteps(e.cols);
    for (int i = 1; i <= d.rows(); ++i) {
        const auto steps = p.paths[i - 1].labeled_steps();
        for (size_t k = 0; k < steps.size(); ++k) {
            const int col = d.mu().part(i) + 1 + static_cast<int>(k);
            if (steps[k].height != 0) wsteps[col - 1].push_back(steps[k].height);
        }
    }
    e.lower_.resize(e.cols);
    e.upper_.resize(e.cols);
    for (int i = 1; i <= e.cols; ++i) {
        std::vector<int> wcount(2 * n + 3, 0);
        for (int h : wsteps[i - 1]) {
            wcount[h + n + 1] += 1;
            if (wcount[h + n + 1] > 1)
                throw std::invalid_argument("more than one W-step at a height");
        }
        std::vector<int> gam(n + 2);
        gam[0] = i - mc.part(i);  // height -n-1
        for (int h = -n - 1; h < 0; ++h)
            gam[h + n + 2] = gam[h + n + 1] - wcount[h + n + 1];
        e.lower_[i - 1] = std::move(gam);
        std::vector<int> del(n + 2);
        del[n + 1] = i - lc.part(i);
        for (int h = n + 1; h > 0; --h) del[h - 1] = del[h] + wcount[h + n + 1];
        e.upper_[i - 1] = std::move(del);
    }
    return e;
}

std::vector<Region> ii_prime_regions(const EPathPair& e) {
    std::vector<Region> out;
    if (e.cols == 0) return out;
    const int n = e.n;
    int xmin = kInf, xmax = -kInf;
    for (int i = 1; i <= e.cols; ++i) {
        for (int h = -n - 1; h <= 0; ++h) {
            xmin = std::min(xmin, e.gamma(i, h));
            xmax = std::max(xmax, e.gamma(i, h));
        }
        for (int h = 0; h <= n + 1; ++h) {
            xmin = std::min(xmin, e.delta(i, h));
            xmax = std::max(xmax, e.delta(i, h));
        }
    }
    const int lo = xmin - n - 3, hi = xmax + n + 3;
    std::set<Unit> units;
    for (int y = -n - 1; y <= n; ++y) {
        for (int x = lo; x <= hi; ++x) {
            Unit u{x, y};
            const int r = u.ht();
            bool is_unit = false;
            for (int i = 1; i <= e.cols && !is_unit; ++i) {
                if (u.in_upper_strip())
                    is_unit = e.gamma_star(i, r) <= x && x + 1 <= e.delta(i, r);
                else
                    is_unit = e.gamma(i, -r) <= x && x + 1 <= e.delta_star(i, -r);
            }
            if (is_unit) units.insert(u);
        }
    }
    // components under adjacency
    std::set<Unit> seen;
    static constexpr int kOff[6][2] = {{-1, 0}, {1, 0}, {0, 1}, {0, -1}, {-1, 1}, {1, -1}};
    for (Unit u : units) {
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
        bool has_zero = false, has_boundary = false;
        for (Unit w : comp) {
            if (w.y == 0 || w.y == -1) has_zero = true;
            if (w.ht() == n) has_boundary = true;
        }
        if (has_zero && !has_boundary) out.push_back(Region{true, 0, comp});
    }
    std::sort(out.begin(), out.end(), [](const Region& a, const Region& b) {
        return a.units < b.units;
    });
    return out;
}

namespace {

Letter bar_of(Letter e, int n) {
    // complement entries are unbarred values or nbar; nbar-bar is n
    if (e.barred) return Letter{n, false};
    return Letter{e.index, true};
}

// strictly increasing unbarred run with the side condition on its last entry
bool valid_L_run(const Tableau& t, int n, int col, int top, int len) {
    for (int i = 0; i < len; ++i) {
        if (!t.has(top + i, col)) return false;
        const Letter e = t.at(top + i, col);
        if (e.barred) return false;
        if (i > 0 && !(t.at(top + i - 1, col) < e)) return false;
    }
    const Letter last = t.at(top + len - 1, col);
    if (last == Letter{n, false} && t.has(top + len - 1, col - 1) &&
        t.at(top + len - 1, col - 1) == Letter{n, true})
        return false;
    return true;
}

// strictly increasing barred run with the side condition on its first entry
bool valid_U_run(const Tableau& t, int n, int col, int top, int len) {
    for (int i = 0; i < len; ++i) {
        if (!t.has(top + i, col)) return false;
        const Letter e = t.at(top + i, col);
        if (!e.barred) return false;
        if (i > 0 && !(t.at(top + i - 1, col) < e)) return false;
    }
    if (t.at(top, col) == Letter{n, true} && t.has(top, col + 1) &&
        t.at(top, col + 1) == Letter{n, false})
        return false;
    return true;
}

std::vector<int> complement(const std::vector<int>& sub, int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v)
        if (std::find(sub.begin(), sub.end(), v) == sub.end()) out.push_back(v);
    return out;
}

bool interleaving_ok(const LUConfiguration& c) {
    for (int i = 1; i <= c.s() - 1; ++i)
        if (!(Letter{c.a[i], false} <= c.bp[i - 1])) return false;
    for (int i = 1; i <= c.t() - 1; ++i) {
        // bbar_{i+1} >= abar'_i
        Letter lhs{c.b[i], true};
        Letter rhs = c.ap[i - 1].barred ? Letter{c.ap[i - 1].index, false}
                                        : Letter{c.ap[i - 1].index, true};
        if (lhs < rhs) return false;
    }
    return true;
}

}  // namespace

std::vector<LUConfiguration> find_LU_configurations(const Tableau& t, int n) {
    std::vector<LUConfiguration> out;
    const SkewDiagram& d = t.shape;
    const Partition lc = d.lambda().conjugate(), mc = d.mu().conjugate();
    for (int col = 1; col <= d.cols(); ++col) {
        const int row_lo = mc.part(col) + 1, row_hi = lc.part(col);
        for (int l_top = row_lo; l_top <= row_hi; ++l_top) {
            if (!t.has(l_top, col) || t.at(l_top, col).barred) continue;
            const int k = t.at(l_top, col).index;
            for (int s = 1; l_top + s - 1 <= row_hi; ++s) {
                if (!valid_L_run(t, n, col, l_top, s)) break;
                std::vector<int> a;
                for (int i = 0; i < s; ++i) a.push_back(t.at(l_top + i, col).index);

                // type 1: U directly below, s + t = n - k + 2
                const int t1 = n - k + 2 - s;
                if (t1 >= 1 && l_top + s + t1 - 1 <= row_hi &&
                    valid_U_run(t, n, col, l_top + s, t1)) {
                    std::vector<int> b;
                    for (int i = 0; i < t1; ++i) b.push_back(t.at(l_top + s + t1 - 1 - i, col).index);
                    const bool in_range =
                        std::all_of(b.begin(), b.end(), [&](int v) { return v >= k && v <= n; });
                    if (b[0] == k && in_range) {
                        LUConfiguration c;
                        c.column = col;
                        c.type = 1;
                        c.k = k;
                        c.l_top = l_top;
                        c.u_top = l_top + s;
                        c.a = a;
                        c.b = b;
                        for (int v : complement(a, k, n)) c.ap.push_back({v, false});
                        c.ap.push_back({n, true});
                        for (int v : complement(b, k, n)) c.bp.push_back({v, false});
                        c.bp.push_back({n, true});
                        if (static_cast<int>(c.ap.size()) == t1 &&
                            static_cast<int>(c.bp.size()) == s && interleaving_ok(c))
                            out.push_back(std::move(c));
                    }
                }

                // type 2: gap of n - k' + 1 cells between the blocks
                for (int t2 = 1; s + t2 <= n - k + 1; ++t2) {
                    const int kprime = k + s + t2 - 1;
                    if (kprime > n || kprime <= k) continue;
                    const int gap = n - kprime + 1;
                    const int u_top = l_top + s + gap;
                    if (u_top + t2 - 1 > row_hi) continue;
                    bool cells_ok = true;
                    for (int rr = l_top + s; rr < u_top && cells_ok; ++rr)
                        if (!t.has(rr, col)) cells_ok = false;
                    if (!cells_ok || !valid_U_run(t, n, col, u_top, t2)) continue;
                    std::vector<int> b;
                    for (int i = 0; i < t2; ++i) b.push_back(t.at(u_top + t2 - 1 - i, col).index);
                    auto in_window = [&](int v) { return v >= k && v <= kprime; };
                    if (b[0] != k) continue;
                    if (!std::all_of(a.begin(), a.end(), in_window)) continue;
                    if (!std::all_of(b.begin(), b.end(), in_window)) continue;
                    if (std::find(a.begin(), a.end(), kprime) != a.end()) continue;
                    if (std::find(b.begin(), b.end(), kprime) != b.end()) continue;
                    // flanking conditions on the first and last gap cells
                    const Letter acell = t.at(l_top + s, col);
                    const Letter bcell = t.at(u_top - 1, col);
                    const bool a_ok =
                        (Letter{kprime, false} < acell) ||
                        (acell == Letter{n, false} && t.has(l_top + s, col - 1) &&
                         t.at(l_top + s, col - 1) == Letter{n, true});
                    const bool b_ok =
                        (bcell < Letter{kprime, true}) ||
                        (bcell == Letter{n, true} && t.has(u_top - 1, col + 1) &&
                         t.at(u_top - 1, col + 1) == Letter{n, false});
                    if (!a_ok || !b_ok) continue;
                    LUConfiguration c;
                    c.column = col;
                    c.type = 2;
                    c.k = k;
                    c.kprime = kprime;
                    c.l_top = l_top;
                    c.u_top = u_top;
                    c.a = a;
                    c.b = b;
                    for (int v : complement(a, k, kprime)) c.ap.push_back({v, false});
                    for (int v : complement(b, k, kprime)) c.bp.push_back({v, false});
                    if (static_cast<int>(c.ap.size()) != t2 ||
                        static_cast<int>(c.bp.size()) != s)
                        continue;
                    if (!(c.ap.back() == Letter{kprime, false})) continue;
                    if (!(c.bp.back() == Letter{kprime, false})) continue;
                    if (interleaving_ok(c)) out.push_back(std::move(c));
                }
            }
        }
    }
    return out;
}

namespace {

struct BoundaryRun {
    int column = 1;
    int top = 1;
    int len = 0;
};

// e is right-next to a_i of X and e < b'_i
bool cells_right_adjacent(const Tableau& t, int col, int top, int len,
                          const LUConfiguration& x) {
    if (col != x.column + 1) return false;
    for (int i = 1; i <= x.s(); ++i) {
        const int row = x.a_row(i);
        if (row >= top && row < top + len && t.has(row, col)) {
            if (t.at(row, col) < x.bp[i - 1]) return true;
        }
    }
    return false;
}

// e is left-next to bbar_i of X and e > abar'_i
bool cells_left_adjacent(const Tableau& t, int n, int col, int top, int len,
                         const LUConfiguration& x) {
    if (col != x.column - 1) return false;
    for (int i = 1; i <= x.t(); ++i) {
        const int row = x.b_row(i);
        if (row >= top && row < top + len && t.has(row, col)) {
            if (bar_of(x.ap[i - 1], n) < t.at(row, col)) return true;
        }
    }
    return false;
}

bool lu_adjacent(const Tableau& t, int n, const LUConfiguration& x, const LUConfiguration& y) {
    return cells_right_adjacent(t, y.column, y.l_top, y.s(), x) ||
           cells_right_adjacent(t, x.column, x.l_top, x.s(), y) ||
           cells_left_adjacent(t, n, y.column, y.u_top, y.t(), x) ||
           cells_left_adjacent(t, n, x.column, x.u_top, x.t(), y);
}

// maximal top run of a column forming an L-configuration disjoint from all
// LU L-blocks; zero length when none exists
BoundaryRun boundary_L(const Tableau& t, int n, int col,
                       const std::vector<LUConfiguration>& configs) {
    const Partition lc = t.shape.lambda().conjugate(), mc = t.shape.mu().conjugate();
    const int top = mc.part(col) + 1, bottom = lc.part(col);
    BoundaryRun best{col, top, 0};
    for (int len = 1; top + len - 1 <= bottom; ++len) {
        if (!valid_L_run(t, n, col, top, len)) continue;
        bool disjoint = true;
        for (const LUConfiguration& c : configs) {
            if (c.column != col) continue;
            if (c.l_top < top + len && c.l_top + c.s() - 1 >= top) disjoint = false;
        }
        if (disjoint) best.len = len;
    }
    return best;
}

BoundaryRun boundary_U(const Tableau& t, int n, int col,
                       const std::vector<LUConfiguration>& configs) {
    const Partition lc = t.shape.lambda().conjugate(), mc = t.shape.mu().conjugate();
    const int top = mc.part(col) + 1, bottom = lc.part(col);
    BoundaryRun best{col, bottom + 1, 0};
    for (int len = 1; bottom - len + 1 >= top; ++len) {
        const int run_top = bottom - len + 1;
        if (!valid_U_run(t, n, col, run_top, len)) continue;
        bool disjoint = true;
        for (const LUConfiguration& c : configs) {
            if (c.column != col) continue;
            if (c.u_top < run_top + len && c.u_top + c.t() - 1 >= run_top) disjoint = false;
        }
        if (disjoint) {
            best.top = run_top;
            best.len = len;
        }
    }
    return best;
}

}  // namespace

bool check_E(const Tableau& t, int n) {
    PathTuple p = from_tableau(t, n);
    for (const Region& v : compute_regions(project(p)))
        if (v.kind_II && v.odd()) return false;
    return true;
}

bool check_E_prime(const Tableau& t, int n) {
    const auto configs = find_LU_configurations(t, n);
    const int m = static_cast<int>(configs.size());
    if (m == 0) return true;

    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (lu_adjacent(t, n, configs[i], configs[j])) parent[find(i)] = find(j);

    std::vector<BoundaryRun> bls, bus;
    for (int col = 1; col <= t.shape.cols() + 1; ++col) {
        if (col <= t.shape.cols()) {
            BoundaryRun bl = boundary_L(t, n, col, configs);
            if (bl.len > 0) bls.push_back(bl);
            BoundaryRun bu = boundary_U(t, n, col, configs);
            if (bu.len > 0) bus.push_back(bu);
        }
    }

    std::map<int, int> type1_count;
    std::map<int, bool> touched;
    for (int i = 0; i < m; ++i) {
        const int root = find(i);
        if (configs[i].type == 1) type1_count[root] += 1;
        bool bad = false;
        for (const BoundaryRun& bl : bls)
            if (cells_right_adjacent(t, bl.column, bl.top, bl.len, configs[i])) bad = true;
        for (const BoundaryRun& bu : bus)
            if (cells_left_adjacent(t, n, bu.column, bu.top, bu.len, configs[i])) bad = true;
        if (bad) touched[root] = true;
    }
    for (const auto& [root, cnt] : type1_count)
        if (cnt % 2 != 0 && !touched[root]) return false;
    return true;
}

bool check_E2C(const Tableau& t, int n) {
    if (t.shape.cols() > 2) throw std::invalid_argument("shape has more than two columns");
    for (const LUConfiguration& c : find_LU_configurations(t, n)) {
        if (c.type != 1) continue;
        bool flagged = true;
        for (int i = 1; i <= c.t() && flagged; ++i) {
            const int row = c.b_row(i);
            if (t.has(row, c.column - 1)) {
                const Letter ck = t.at(row, c.column - 1);
                if (!(ck <= bar_of(c.ap[i - 1], n))) flagged = false;
            }
        }
        for (int i = 1; i <= c.s() && flagged; ++i) {
            const int row = c.a_row(i);
            if (t.has(row, c.column + 1)) {
                const Letter dk = t.at(row, c.column + 1);
                if (!(c.bp[i - 1] <= dk)) flagged = false;
            }
        }
        if (flagged) return false;
    }
    return true;
}

std::vector<Tableau> enumerate_hv_tableaux(const SkewDiagram& d, int n) {
    std::vector<Letter> alphabet;
    for (int i = 1; i <= n; ++i) alphabet.push_back({i, false});
    for (int i = n; i >= 1; --i) alphabet.push_back({i, true});
    const Letter nb{n, true}, nu{n, false};

    std::vector<Tableau> out;
    Tableau t{d, {}};
    t.rows.resize(d.rows());
    for (int i = 1; i <= d.rows(); ++i)
        t.rows[i - 1].assign(d.lambda().part(i) - d.mu().part(i), Letter{1, false});

    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= d.rows(); ++i)
        for (int j = d.mu().part(i) + 1; j <= d.lambda().part(i); ++j) cells.emplace_back(i, j);

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            if (check_H(t, n) && check_V(t, n)) out.push_back(t);
            return;
        }
        const auto [i, j] = cells[idx];
        for (Letter e : alphabet) {
            if (t.has(i, j - 1)) {
                const Letter left = t.at(i, j - 1);
                if (!(left <= e) && !(left == nb && e == nu)) continue;
                if (t.has(i, j - 2)) {
                    const Letter ll = t.at(i, j - 2);
                    if (ll == nb && e == nu && (left == nb || left == nu)) continue;
                }
            }
            if (t.has(i - 1, j)) {
                const Letter up = t.at(i - 1, j);
                bool ok = up < e;
                if (!ok && up == nu && e == nu && t.has(i, j - 1) && t.at(i, j - 1) == nb) ok = true;
                if (!ok && up == nb && e == nb && t.has(i - 1, j + 1) && t.at(i - 1, j + 1) == nu)
                    ok = true;
                if (!ok) continue;
            }
            t.rows[i - 1][j - d.mu().part(i) - 1] = e;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Tableau> enumerate_tableaux(const SkewDiagram& d, int n) {
    if (!positivity_holds(d, n))
        throw PositivityError("the tableaux description requires depth <= n+1");
    std::vector<Tableau> out;
    for (Tableau& t : enumerate_hv_tableaux(d, n))
        if (check_E_prime(t, n)) out.push_back(std::move(t));
    return out;
}

Polynomial tab_sum(const SkewDiagram& d, int n) {
    Polynomial acc;
    for (const Tableau& t : enumerate_tableaux(d, n)) acc.add_term(t.weight(), 1);
    return acc;
}

}  // namespace cjt
