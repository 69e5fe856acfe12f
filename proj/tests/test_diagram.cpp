#include <doctest.h>

#include "cjt/diagram.hpp"

using namespace cjt;

namespace {

// independent column-count oracle
int column_height(const SkewDiagram& d, int j) {
    int h = 0;
    for (int i = 1; i <= d.rows(); ++i)
        if (d.has_cell(i, j)) ++h;
    return h;
}

int brute_depth(const SkewDiagram& d) {
    int m = 0;
    for (int j = 1; j <= d.cols(); ++j) m = std::max(m, column_height(d, j));
    return m;
}

std::vector<Partition> all_partitions_in_box(int w, int h) {
    std::vector<Partition> out;
    std::vector<std::vector<int>> stack{{}};
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) >= h) continue;
        int cap = cur.empty() ? w : cur.back();
        for (int p = 1; p <= cap; ++p) {
            auto nxt = cur;
            nxt.push_back(p);
            stack.push_back(std::move(nxt));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("conjugate basics") {
    CHECK(Partition({3, 2}).conjugate() == Partition({2, 2, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition({2, 2, 2}).conjugate() == Partition({3, 3}));
}

TEST_CASE("conjugate is an involution on the 8x8 box") {
    for (const Partition& p : all_partitions_in_box(8, 8))
        CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("depth") {
    CHECK(SkewDiagram(Partition({2, 2, 2}), Partition{}).depth() == 3);
    CHECK(SkewDiagram(Partition({3, 1}), Partition({1})).depth() == 1);
    CHECK(SkewDiagram(Partition({1, 1, 1, 1}), Partition{}).depth() == 4);
    CHECK(SkewDiagram(Partition{}, Partition{}).depth() == 0);
}

TEST_CASE("positivity condition, both formulations") {
    CHECK_FALSE(positivity_holds(SkewDiagram(Partition({1, 1, 1, 1}), Partition{}), 2));
    CHECK(positivity_holds(SkewDiagram(Partition({2, 1}), Partition{}), 2));
    CHECK(positivity_holds(SkewDiagram(Partition({2, 2, 2}), Partition{}), 2));

    for (const SkewDiagram& d : diagram_universe(6, 3, 5)) {
        for (int n = 1; n <= 3; ++n) {
            bool alt = true;  // lambda_{i+n+1} <= mu_i for all i >= 1 (mu_0 = +inf)
            for (int i = 1; i + n + 1 <= d.rows(); ++i)
                if (d.lambda().part(i + n + 1) > d.mu().part(i)) alt = false;
            CHECK(positivity_holds(d, n) == alt);
        }
    }
}

TEST_CASE("cell counts match both row and column sums") {
    for (const SkewDiagram& d : diagram_universe(6, 3, 3)) {
        int rows_sum = 0;
        for (int i = 1; i <= d.rows(); ++i) rows_sum += d.lambda().part(i) - d.mu().part(i);
        const Partition lc = d.lambda().conjugate(), mc = d.mu().conjugate();
        int cols_sum = 0;
        for (int j = 1; j <= lc.length(); ++j) cols_sum += lc.part(j) - mc.part(j);
        CHECK(d.cells() == rows_sum);
        CHECK(d.cells() == cols_sum);
        CHECK(d.depth() == brute_depth(d));
    }
}

TEST_CASE("partition parsing") {
    CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse(" 2 , 2 ") == Partition({2, 2}));
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(SkewDiagram(Partition({1}), Partition({2})), std::invalid_argument);
}

TEST_CASE("diagram universe is duplicate-free and respects bounds") {
    auto univ = diagram_universe(6, 3, 3);
    for (size_t i = 0; i < univ.size(); ++i) {
        CHECK(univ[i].cells() <= 6);
        CHECK(univ[i].lambda().first() <= 3);
        CHECK(univ[i].lambda().length() <= 3);
        for (size_t j = i + 1; j < univ.size(); ++j) CHECK(!(univ[i] == univ[j]));
    }
    CHECK(univ.size() > 50);
}
