#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "cjt/genseries.hpp"
#include "cjt/regions.hpp"
#include "cjt/render.hpp"
#include "cjt/tableaux.hpp"
#include "cjt/verify.hpp"

namespace {

constexpr int kExitIdentity = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPositivity = 3;

cjt::SkewDiagram parse_shape(const std::string& lambda, const std::string& mu) {
    return cjt::SkewDiagram(cjt::Partition::parse(lambda), cjt::Partition::parse(mu));
}

std::vector<cjt::PathTuple> tuple_set(const std::string& set, const cjt::SkewDiagram& d, int n) {
    if (set == "signed") return cjt::enumerate_p1(d, n);
    if (set == "p2") return cjt::enumerate_p2(d, n);
    if (set == "positive") return cjt::enumerate_p(d, n);
    return cjt::enumerate_hv_tuples(d, n);  // "hv"
}

nlohmann::json tuple_to_json(const cjt::PathTuple& t) {
    nlohmann::json sigma = nlohmann::json::array();
    for (int s : t.sigma) sigma.push_back(s + 1);
    nlohmann::json paths = nlohmann::json::array();
    for (const cjt::Path& p : t.paths) {
        nlohmann::json steps = nlohmann::json::array();
        for (const cjt::LabeledStep& s : p.labeled_steps())
            steps.push_back({{"height", s.height}, {"x", s.x}});
        paths.push_back({{"from", p.start()}, {"to", p.end()}, {"steps", steps}});
    }
    return {{"sigma", sigma},
            {"sign", t.sign},
            {"paths", paths},
            {"weight", t.weight().str()}};
}

nlohmann::json region_to_json(const cjt::Region& v) {
    nlohmann::json units = nlohmann::json::array();
    for (cjt::Unit u : v.units)
        units.push_back({{"side", u.in_upper_strip() ? "+" : "-"}, {"x", u.x}, {"r", u.ht()}});
    return {{"kind", v.kind_II ? "II" : "I"}, {"n", v.parity_count}, {"units", units}};
}

int cmd_chi(int n, const std::string& lambda, const std::string& mu, const std::string& form,
            bool as_json) {
    const cjt::SkewDiagram d = parse_shape(lambda, mu);
    cjt::Polynomial chi;
    if (form == "h") {
        chi = cjt::jt_det_h(d, n);
    } else if (form == "e") {
        chi = cjt::jt_det_e(d, n);
    } else if (form == "paths-signed") {
        chi = cjt::signed_sum(d, n);
    } else if (form == "paths-positive") {
        chi = cjt::weight_sum(cjt::enumerate_p(d, n));
    } else {  // "tableaux"
        chi = cjt::tab_sum(d, n);
    }
    if (as_json)
        std::cout << cjt::polynomial_to_json(chi).dump(2) << "\n";
    else
        std::cout << chi.str() << "\n";
    return 0;
}

int cmd_tableaux(int n, const std::string& lambda, const std::string& mu, bool all_hv,
                 const std::string& check, bool as_json) {
    const cjt::SkewDiagram d = parse_shape(lambda, mu);
    if (!check.empty()) {
        const cjt::Tableau t = cjt::parse_tableau(check, d);
        const bool h = cjt::check_H(t, n), v = h && cjt::check_V(t, n);
        nlohmann::json r{{"H", h}, {"V", v}};
        if (h && v) {
            r["E"] = cjt::check_E(t, n);
            r["E'"] = cjt::check_E_prime(t, n);
            if (d.cols() <= 2) r["E-2C"] = cjt::check_E2C(t, n);
        }
        std::cout << r.dump(2) << "\n";
        return 0;
    }
    const auto tabs = all_hv ? cjt::enumerate_hv_tableaux(d, n) : cjt::enumerate_tableaux(d, n);
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const cjt::Tableau& t : tabs) arr.push_back(cjt::tableau_to_json(t));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const cjt::Tableau& t : tabs) std::cout << cjt::tableau_to_string(t) << "\n";
        std::cout << "total " << tabs.size() << "\n";
    }
    return 0;
}

int cmd_paths(int n, const std::string& lambda, const std::string& mu, const std::string& set,
              bool with_regions) {
    const cjt::SkewDiagram d = parse_shape(lambda, mu);
    const auto tuples = tuple_set(set, d, n);
    nlohmann::json arr = nlohmann::json::array();
    for (const cjt::PathTuple& t : tuples) {
        nlohmann::json j = tuple_to_json(t);
        if (with_regions) {
            nlohmann::json regs = nlohmann::json::array();
            for (const cjt::Region& v : cjt::compute_regions(cjt::project(t)))
                regs.push_back(region_to_json(v));
            j["regions"] = regs;
        }
        arr.push_back(j);
    }
    std::cout << nlohmann::json{{"n", n},
                                {"lambda", d.lambda().parts()},
                                {"mu", d.mu().parts()},
                                {"set", set},
                                {"tuples", arr}}
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_verify(int n, int max_cells, const std::string& suite) {
    if (!cjt::valid_suite(suite)) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitUsage;
    }
    const cjt::VerifyResult res = cjt::run_verify({n, max_cells, suite});
    std::cout << res.report;
    return res.ok ? 0 : kExitIdentity;
}

int cmd_render(int n, const std::string& lambda, const std::string& mu, const std::string& set,
               int index, const std::string& out_path) {
    const cjt::SkewDiagram d = parse_shape(lambda, mu);
    const auto tuples = tuple_set(set, d, n);
    if (index < 0 || index >= static_cast<int>(tuples.size())) {
        std::cerr << "index " << index << " out of range (set has " << tuples.size()
                  << " tuples)\n";
        return kExitUsage;
    }
    const std::string svg = cjt::render_svg(cjt::project(tuples[index]));
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return kExitUsage;
    }
    out << svg;
    out.close();
    return out ? 0 : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact type-C Jacobi-Trudi determinants via paths and tableaux"};
    app.require_subcommand(1);

    int n = 2;
    std::string lambda, mu, form = "h", set = "hv", suite = "all", check, out_path;
    int max_cells = 4, index = 0;
    bool as_json = false, all_hv = false, with_regions = false;

    auto add_shape = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "rank of the root system")->required()->check(CLI::Range(1, 16));
        cmd->add_option("--lambda", lambda, "outer partition, e.g. 3,2,1");
        cmd->add_option("--mu", mu, "inner partition (default empty)");
    };

    CLI::App* chi = app.add_subcommand("chi", "print the determinant as a polynomial");
    add_shape(chi);
    chi->add_option("--form", form, "h | e | paths-signed | paths-positive | tableaux")
        ->check(CLI::IsMember({"h", "e", "paths-signed", "paths-positive", "tableaux"}));
    chi->add_flag("--json", as_json, "emit the polynomial JSON schema");

    CLI::App* tab = app.add_subcommand("tableaux", "enumerate or check tableaux");
    add_shape(tab);
    tab->add_flag("--all-hv", all_hv, "list HV-tableaux without the extra rule");
    tab->add_option("--check", check, "verdicts for one filling, e.g. \"1,2 / 2b,1b\"");
    tab->add_flag("--json", as_json, "emit JSON");

    CLI::App* paths = app.add_subcommand("paths", "dump path tuples as JSON");
    add_shape(paths);
    paths->add_option("--set", set, "signed | p2 | positive | hv")
        ->check(CLI::IsMember({"signed", "p2", "positive", "hv"}));
    paths->add_flag("--regions", with_regions, "include region analysis per tuple");

    CLI::App* verify = app.add_subcommand("verify", "run identity suites over small diagrams");
    verify->add_option("--n", n, "rank of the root system")->required()->check(CLI::Range(1, 16));
    verify->add_option("--max-cells", max_cells, "cell budget for the diagram universe")
        ->check(CLI::Range(0, 8));
    verify->add_option("--suite", suite, "determinants | paths | regions | tableaux | all");

    CLI::App* render = app.add_subcommand("render", "write an SVG of one tuple's half-pair");
    add_shape(render);
    render->add_option("--set", set, "signed | p2 | positive | hv")
        ->check(CLI::IsMember({"signed", "p2", "positive", "hv"}));
    render->add_option("--index", index, "tuple index in the set's enumeration order");
    render->add_option("--out", out_path, "output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("chi")) return cmd_chi(n, lambda, mu, form, as_json);
        if (app.got_subcommand("tableaux")) return cmd_tableaux(n, lambda, mu, all_hv, check, as_json);
        if (app.got_subcommand("paths")) return cmd_paths(n, lambda, mu, set, with_regions);
        if (app.got_subcommand("verify")) return cmd_verify(n, max_cells, suite);
        if (app.got_subcommand("render")) return cmd_render(n, lambda, mu, set, index, out_path);
    } catch (const cjt::PositivityError& e) {
        std::cerr << "positivity violation: " << e.what() << "\n";
        return kExitPositivity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
