#include "cjt/verify.hpp"

#include "cjt/genseries.hpp"
#include "cjt/regions.hpp"
#include "cjt/tableaux.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace cjt {

namespace {

using Clock = std::chrono::steady_clock;

std::set<std::vector<Unit>> ii_unit_sets(const std::vector<Region>& regs) {
    std::set<std::vector<Unit>> out;
    for (const Region& r : regs)
        if (r.kind_II) out.insert(r.units);
    return out;
}

struct Failure {
    std::string what;
};

void check(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

void verify_determinants(const SkewDiagram& d, int n, std::ostringstream& line) {
    const FreeLaurent h = psi(jt_det_h(d, n), n);
    const FreeLaurent e = psi(jt_det_e(d, n), n);
    check(h == e, "jt_det_h and jt_det_e disagree under psi");
    line << " det-terms=" << h.term_count();
}

void verify_paths(const SkewDiagram& d, int n, std::ostringstream& line) {
    const FreeLaurent chi = psi(jt_det_h(d, n), n);
    const auto p1 = enumerate_p1(d, n);
    check(psi(signed_sum(d, n), n) == chi, "signed path sum differs from the determinant");
    line << " |P1|=" << p1.size();
}

void verify_regions(const SkewDiagram& d, int n, std::ostringstream& line) {
    const FreeLaurent chi = psi(jt_det_h(d, n), n);
    const auto p2 = enumerate_p2(d, n);
    const auto p = enumerate_p(d, n);
    check(psi(weight_sum(p2), n) == chi, "P2 weight sum differs from the determinant");
    check(psi(weight_sum(p), n) == chi, "P weight sum differs from the determinant");
    check(p2.size() == p.size(), "|P2| and |P| differ");
    for (const PathTuple& t : enumerate_hv_tuples(d, n)) {
        const HalfPair hp = project(t);
        for (int i = 1; i + 1 <= hp.l; ++i) {
            check(beta_at(hp, i + 1, hp.n + 1) <= alpha_star(hp, i, hp.n),
                  "upper endpoint ordering fails");
            check(beta_star(hp, i + 1, -hp.n) <= alpha_at(hp, i, -hp.n - 1),
                  "lower endpoint ordering fails");
        }
        const auto regs = compute_regions(hp);
        for (const Region& v : regs) {
            std::vector<Unit> dual;
            for (Unit u : v.units) dual.push_back(unit_dual(u));
            std::sort(dual.begin(), dual.end());
            check(dual == v.units, "region is not self-dual");
            const HalfPair moved = epsilon(hp, v);
            bool swapped = false;
            Region back;
            for (const Region& w : compute_regions(moved))
                if (w.units == v.units && w.kind_II != v.kind_II) {
                    swapped = true;
                    back = w;
                }
            check(swapped, "deformation does not swap the region kind");
            check(epsilon(moved, back) == hp, "deformation is not an involution");
        }
        check(ii_unit_sets(regs) == ii_unit_sets(ii_prime_regions(to_epaths(t, d, n))),
              "II and II' regions differ");
    }
    line << " |P2|=" << p2.size() << " |P|=" << p.size();
}

void verify_tableaux(const SkewDiagram& d, int n, std::ostringstream& line) {
    const FreeLaurent chi = psi(jt_det_h(d, n), n);
    const auto tuples = enumerate_hv_tuples(d, n);
    const auto hv = enumerate_hv_tableaux(d, n);
    check(tuples.size() == hv.size(), "path and tableau counts differ");
    std::multiset<std::string> wa, wb;
    for (const PathTuple& p : tuples) {
        const Tableau t = to_tableau(p, d, n);
        check(from_tableau(t, n) == p, "tableau round trip broke");
        wa.insert(psi(Polynomial::monomial(p.weight(), 1), n).str());
    }
    for (const Tableau& t : hv) {
        wb.insert(psi(Polynomial::monomial(t.weight(), 1), n).str());
        check(check_E(t, n) == check_E_prime(t, n), "extra rules disagree");
        if (d.cols() <= 2)
            check(check_E2C(t, n) == check_E_prime(t, n), "two-column rule disagrees");
    }
    check(wa == wb, "weight multisets differ across the bijection");
    const auto tab = enumerate_tableaux(d, n);
    check(psi(tab_sum(d, n), n) == chi, "tableau sum differs from the determinant");
    line << " |TabHV|=" << hv.size() << " |Tab|=" << tab.size();
}

}  // namespace

bool valid_suite(const std::string& name) {
    return name == "determinants" || name == "paths" || name == "regions" ||
           name == "tableaux" || name == "all";
}

VerifyResult run_verify(const VerifyOptions& opts) {
    VerifyResult res;
    std::ostringstream out;
    const auto universe = diagram_universe(opts.max_cells, opts.max_cells, opts.max_cells);
    int ran = 0;
    for (const SkewDiagram& d : universe) {
        if (!positivity_holds(d, opts.n)) continue;
        std::ostringstream line;
        const auto t0 = Clock::now();
        try {
            if (opts.suite == "determinants" || opts.suite == "all")
                verify_determinants(d, opts.n, line);
            if (opts.suite == "paths" || opts.suite == "all") verify_paths(d, opts.n, line);
            if (opts.suite == "regions" || opts.suite == "all") verify_regions(d, opts.n, line);
            if (opts.suite == "tableaux" || opts.suite == "all") verify_tableaux(d, opts.n, line);
        } catch (const Failure& f) {
            out << "[fail] n=" << opts.n << " " << d.to_string() << " : " << f.what << "\n";
            out << "counterexample: lambda=(" << d.lambda().to_string() << ") mu=("
                << d.mu().to_string() << ") suite=" << opts.suite << "\n";
            res.ok = false;
            res.report = out.str();
            return res;
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        out << "[ok] n=" << opts.n << " " << d.to_string() << line.str() << " " << ms << "ms\n";
        ++ran;
    }
    out << "verified " << ran << " diagrams, suite=" << opts.suite << ", n=" << opts.n << "\n";
    res.report = out.str();
    return res;
}

}  // namespace cjt
