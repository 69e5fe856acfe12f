#include <doctest.h>

#include <algorithm>

#include "cjt/genseries.hpp"
#include "cjt/regions.hpp"

using namespace cjt;

namespace {

Path make_path(int n, std::vector<std::pair<int, int>> e_steps, int start_x) {
    std::vector<int> pos(2 * n + 3, start_x);
    std::vector<int> counts(2 * n + 3, 0);
    for (auto [h, c] : e_steps) counts[h + n + 1] = c;
    for (int k = 1; k < 2 * n + 3; ++k) pos[k] = pos[k - 1] + counts[k - 1];
    return Path(n, pos);
}

// lambda=(1,1), mu=(), n=2, identity tuple carrying the (n, nbar) column:
// E-step at height -1 from x=0 and E-step at height +1 from x=-1.
PathTuple nnbar_column_tuple() {
    PathTuple t;
    t.paths = {make_path(2, {{-1, 1}}, 0), make_path(2, {{1, 1}}, -1)};
    t.sigma = {0, 1};
    t.sign = 1;
    return t;
}

// The sigma-swapped partner: vertical path 0 -> 0 and a two-E0-step path
// -1 -> 1; the pair carries an even overlap.
PathTuple swapped_overlap_tuple() {
    PathTuple t;
    t.paths = {make_path(2, {}, 0), make_path(2, {{0, 2}}, -1)};
    t.sigma = {1, 0};
    t.sign = -1;
    return t;
}

}  // namespace

TEST_CASE("projection splits paths at height 0") {
    PathTuple t;
    t.paths = {make_path(2, {}, 3)};
    t.sigma = {0};
    HalfPair hp = project(t);
    for (int h = -3; h <= 0; ++h) CHECK(hp.lower(1, h) == 3);
    for (int h = 0; h <= 3; ++h) CHECK(hp.upper(1, h) == 3);

    PathTuple s;
    s.paths = {make_path(2, {{-1, 1}}, 0)};
    s.sigma = {0};
    HalfPair hq = project(s);
    CHECK(hq.lower(1, -1) == 0);
    CHECK(hq.lower(1, 0) == 1);   // one E-step at height -1
    CHECK(hq.lower(1, -3) == 0);  // start preserved
    for (int h = 0; h <= 3; ++h) CHECK(hq.upper(1, h) == 1);

    // height-0 E-steps are dropped but endpoints survive
    PathTuple z;
    z.paths = {make_path(2, {{0, 2}}, -1)};
    z.sigma = {0};
    HalfPair hz = project(z);
    CHECK(hz.lower(1, 0) == -1);
    CHECK(hz.upper(1, 0) == 1);
    CHECK(hz.lower(1, -3) == -1);
    CHECK(hz.upper(1, 3) == 1);
}

TEST_CASE("dual values and sentinels") {
    HalfPair hp = project(nnbar_column_tuple());
    CHECK(alpha_star(hp, 1, 0) == hp.lower(1, 0) - 1);
    CHECK(alpha_star(hp, 1, 1) == kInf);   // i - r <= 0
    CHECK(alpha_star(hp, 2, 1) == hp.lower(1, -1) - 2);
    CHECK(beta_star(hp, 2, 0) == hp.upper(2, 0) + 1);
    CHECK(beta_star(hp, 1, -2) == -kInf);  // i + r > l

    PathTuple single;
    single.paths = {make_path(2, {}, 0)};
    single.sigma = {0};
    HalfPair hs = project(single);
    CHECK(beta_star(hs, 1, -1) == -kInf);  // l = 1, i + r = 2 > l

    HalfPairDual d = dual_half(hp);
    for (int i = 1; i <= hp.l; ++i)
        for (int r = 0; r + 1 <= hp.n; ++r) {
            if (d.alpha_star[i - 1][r] < kInf / 2)
                CHECK(d.alpha_star[i - 1][r] <= d.alpha_star[i - 1][r + 1]);
            if (d.beta_star[i - 1][r + 1] > -kInf / 2)
                CHECK(d.beta_star[i - 1][r + 1] <= d.beta_star[i - 1][r]);
        }
}

TEST_CASE("unit duality") {
    CHECK(unit_dual(Unit{0, 0}) == Unit{1, -1});
    CHECK(unit_dual(Unit{0, 2}) == Unit{3, -3});
    for (int x = -4; x <= 4; ++x)
        for (int y = -4; y <= 4; ++y) CHECK(unit_dual(unit_dual(Unit{x, y})) == Unit{x, y});
}

TEST_CASE("unit classification") {
    HalfPair empty;
    CHECK(classify_unit(empty, Unit{0, 0}) == UnitClass::none);

    HalfPair hp = project(nnbar_column_tuple());
    CHECK(classify_unit(hp, Unit{-1, 0}) == UnitClass::II);
    CHECK(classify_unit(hp, Unit{0, -1}) == UnitClass::II);
    // r = n units satisfying the II inequality are boundary
    CHECK(classify_unit(hp, Unit{1, -3}) == UnitClass::boundary_II);
    // sentinel-witnessed strips are boundary
    CHECK(classify_unit(hp, Unit{5, 0}) == UnitClass::boundary_II);

    HalfPair sw = project(swapped_overlap_tuple());
    CHECK(classify_unit(sw, Unit{-1, 0}) == UnitClass::I);
    CHECK(classify_unit(sw, Unit{0, -1}) == UnitClass::I);

    // k = 1 agrees with the plain classification
    for (const HalfPair& h : {hp, sw})
        for (int x = -4; x <= 4; ++x)
            for (int y = -3; y <= 2; ++y)
                CHECK(classify_unit_k(h, Unit{x, y}, 1) == classify_unit(h, Unit{x, y}));
    CHECK_THROWS_AS(classify_unit_k(hp, Unit{0, 0}, 5), std::out_of_range);
}

TEST_CASE("the (n,nbar) column carries one odd II-region") {
    HalfPair hp = project(nnbar_column_tuple());
    auto regs = compute_regions(hp);
    REQUIRE(regs.size() == 1);
    CHECK(regs[0].kind_II);
    CHECK(regs[0].parity_count == 1);
    CHECK(regs[0].odd());
    CHECK(regs[0].units == std::vector<Unit>{Unit{0, -1}, Unit{-1, 0}});
    // region duality
    for (const Region& v : regs) {
        std::vector<Unit> dual;
        for (Unit u : v.units) dual.push_back(unit_dual(u));
        std::sort(dual.begin(), dual.end());
        CHECK(dual == v.units);
    }
}

TEST_CASE("the swapped partner carries one odd I-region") {
    auto regs = compute_regions(project(swapped_overlap_tuple()));
    REQUIRE(regs.size() == 1);
    CHECK_FALSE(regs[0].kind_II);
    CHECK(regs[0].parity_count == 1);
    CHECK(regs[0].units == std::vector<Unit>{Unit{0, -1}, Unit{-1, 0}});
}

TEST_CASE("expansion and folding swap the region kind and invert") {
    HalfPair hp = project(nnbar_column_tuple());
    auto regs = compute_regions(hp);
    REQUIRE(regs.size() == 1);
    HalfPair folded = epsilon(hp, regs[0]);
    auto regs2 = compute_regions(folded);
    REQUIRE(regs2.size() == 1);
    CHECK_FALSE(regs2[0].kind_II);
    CHECK(regs2[0].units == regs[0].units);
    // endpoints are preserved
    for (int i = 1; i <= hp.l; ++i) {
        CHECK(folded.lower(i, -3) == hp.lower(i, -3));
        CHECK(folded.upper(i, 3) == hp.upper(i, 3));
    }
    CHECK(epsilon(folded, regs2[0]) == hp);

    // a region of a different pair is rejected
    HalfPair other = project(swapped_overlap_tuple());
    auto other_regs = compute_regions(other);
    CHECK_THROWS_AS(epsilon(hp, other_regs[0]), std::invalid_argument);
}

TEST_CASE("positive path sets on single boxes and columns") {
    SkewDiagram box{Partition({1}), Partition{}};
    for (int n : {1, 2, 3}) {
        auto p2 = enumerate_p2(box, n);
        auto p = enumerate_p(box, n);
        CHECK(p2.size() == static_cast<size_t>(2 * n));
        CHECK(p.size() == static_cast<size_t>(2 * n));
    }

    SkewDiagram col{Partition({1, 1}), Partition{}};
    auto p2 = enumerate_p2(col, 2);
    auto p = enumerate_p(col, 2);
    CHECK(p2.size() == 5);
    CHECK(p.size() == 5);
    Polynomial expect = e_coeff(2, 2, 0);
    CHECK(psi(weight_sum(p2), 2) == psi(expect, 2));
    CHECK(psi(weight_sum(p), 2) == psi(expect, 2));
    // the excluded filling is exactly the (2, 2bar) column
    Monomial bad = Monomial::var({{2, false}, 0}) * Monomial::var({{2, true}, -2});
    for (const PathTuple& t : p) CHECK(t.weight() != bad);

    SkewDiagram empty{Partition{}, Partition{}};
    CHECK(enumerate_p2(empty, 2).size() == 1);
    CHECK(enumerate_p(empty, 2).size() == 1);

    SkewDiagram deep{Partition({1, 1, 1}), Partition{}};
    CHECK_THROWS_AS(enumerate_p2(deep, 1), PositivityError);
    CHECK_THROWS_AS(enumerate_p(deep, 1), PositivityError);
}

TEST_CASE("four-way equality and region invariants on a small sample") {
    for (int n : {2, 3}) {
        for (const SkewDiagram& d : diagram_universe(4, 2, 2)) {
            if (!positivity_holds(d, n)) continue;
            const FreeLaurent chi = psi(jt_det_h(d, n), n);
            auto p2 = enumerate_p2(d, n);
            auto p = enumerate_p(d, n);
            CHECK(psi(weight_sum(p2), n) == chi);
            CHECK(psi(weight_sum(p), n) == chi);
            CHECK(p2.size() == p.size());

            for (const PathTuple& t : enumerate_hv_tuples(d, n)) {
                HalfPair hp = project(t);
                // endpoint ordering under positivity
                for (int i = 1; i + 1 <= hp.l; ++i) {
                    const int as = alpha_star(hp, i, hp.n);  // value at n extends to n+1
                    const int bs = beta_star(hp, i + 1, -hp.n);
                    CHECK(beta_at(hp, i + 1, hp.n + 1) <= as);
                    CHECK(bs <= alpha_at(hp, i, -hp.n - 1));
                }
                for (const Region& v : compute_regions(hp)) {
                    std::vector<Unit> dual;
                    for (Unit u : v.units) dual.push_back(unit_dual(u));
                    std::sort(dual.begin(), dual.end());
                    CHECK(dual == v.units);
                    HalfPair moved = epsilon(hp, v);
                    Region back;
                    bool found = false;
                    for (const Region& w : compute_regions(moved))
                        if (w.units == v.units && w.kind_II != v.kind_II) {
                            back = w;
                            found = true;
                        }
                    REQUIRE(found);
                    CHECK(epsilon(moved, back) == hp);
                }
            }
        }
    }
}
