#include "cjt/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cjt {

namespace {

constexpr int kScale = 24;

struct Frame {
    int xlo, xhi, ylo, yhi;
    int px(int x) const { return (x - xlo) * kScale + kScale; }
    int py(int y) const { return (yhi - y) * kScale + kScale; }
    int width() const { return (xhi - xlo) * kScale + 2 * kScale; }
    int height() const { return (yhi - ylo) * kScale + 2 * kScale; }
};

void rect(std::ostringstream& os, const Frame& f, Unit u, const char* cls, const char* fill) {
    os << "  <rect class=\"" << cls << "\" x=\"" << f.px(u.x) << "\" y=\"" << f.py(u.y + 1)
       << "\" width=\"" << kScale << "\" height=\"" << kScale << "\" fill=\"" << fill
       << "\"/>\n";
}

void polyline(std::ostringstream& os, const Frame& f,
              const std::vector<std::pair<int, int>>& pts, const char* cls,
              const char* stroke) {
    os << "  <polyline class=\"" << cls << "\" fill=\"none\" stroke=\"" << stroke
       << "\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) os << " ";
        os << f.px(pts[i].first) << "," << f.py(pts[i].second);
    }
    os << "\"/>\n";
}

}  // namespace

std::string render_svg(const HalfPair& hp) {
    const int n = hp.n;
    int xlo = 0, xhi = 1;
    for (int i = 1; i <= hp.l; ++i) {
        for (int h = -n - 1; h <= 0; ++h) {
            xlo = std::min(xlo, hp.lower(i, h));
            xhi = std::max(xhi, hp.lower(i, h));
        }
        for (int h = 0; h <= n + 1; ++h) {
            xlo = std::min(xlo, hp.upper(i, h));
            xhi = std::max(xhi, hp.upper(i, h));
        }
    }
    const Frame f{xlo - 1, xhi + 1, -n - 1, n + 1};

    std::set<Unit> region_units;
    const auto regions = compute_regions(hp);
    for (const Region& v : regions)
        if (v.kind_II)
            for (Unit u : v.units) region_units.insert(u);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width() << "\" height=\""
       << f.height() << "\" viewBox=\"0 0 " << f.width() << " " << f.height() << "\">\n";
    os << "  <rect width=\"" << f.width() << "\" height=\"" << f.height()
       << "\" fill=\"white\"/>\n";

    // shaded II-units (non-boundary), then darker region units on top
    for (int y = -n - 1; y <= n; ++y) {
        for (int x = f.xlo; x < f.xhi; ++x) {
            Unit u{x, y};
            if (region_units.count(u)) continue;
            if (!unit_witnesses_II(hp, u).empty() && !unit_is_boundary_II(hp, u))
                rect(os, f, u, "ii-unit", "#cccccc");
        }
    }
    for (Unit u : region_units) rect(os, f, u, "region", "#8c8c8c");

    // lattice grid and the height-0 axis
    for (int y = -n - 1; y <= n + 1; ++y)
        os << "  <line x1=\"" << f.px(f.xlo) << "\" y1=\"" << f.py(y) << "\" x2=\""
           << f.px(f.xhi) << "\" y2=\"" << f.py(y) << "\" stroke=\""
           << (y == 0 ? "#555555" : "#e8e8e8") << "\" stroke-width=\"1\"/>\n";
    for (int x = f.xlo; x <= f.xhi; ++x)
        os << "  <line x1=\"" << f.px(x) << "\" y1=\"" << f.py(f.ylo) << "\" x2=\"" << f.px(x)
           << "\" y2=\"" << f.py(f.yhi) << "\" stroke=\"#e8e8e8\" stroke-width=\"1\"/>\n";

    for (int i = 1; i <= hp.l; ++i) {
        std::vector<std::pair<int, int>> lo{{hp.lower(i, -n - 1), -n - 1}};
        for (int h = -n - 1; h < 0; ++h) {
            if (hp.lower(i, h + 1) != lo.back().first) lo.emplace_back(hp.lower(i, h + 1), h);
            lo.emplace_back(hp.lower(i, h + 1), h + 1);
        }
        polyline(os, f, lo, "lower-path", "#1f4e9c");

        std::vector<std::pair<int, int>> up{{hp.upper(i, 0), 0}};
        for (int h = 1; h <= n + 1; ++h) {
            up.emplace_back(hp.upper(i, h - 1), h);
            if (hp.upper(i, h) != up.back().first) up.emplace_back(hp.upper(i, h), h);
        }
        polyline(os, f, up, "upper-path", "#9c1f1f");
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace cjt
