// Command-line front end: metric queries, verification suites, NM scans and
// convergence tables. Deterministic per --seed; exit codes: 0 pass,
// 1 property violation, 2 usage/geometry error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ballmetric/io.hpp"

namespace bm = ballmetric;

namespace {

bm::Vec3 parse_vec(const std::string& s, const std::string& flag) {
    bm::Vec3 v;
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &v.x, &v.y, &v.z) != 3)
        throw std::invalid_argument(flag + " wants x,y,z");
    return v;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

int cmd_sphere_dist(double r, double s, const std::string& p_str, const std::string& q_str) {
    const bm::SpherePose sphere({0, 0, 0}, r);
    const bm::ShortcutParam scale(s);
    const bm::Vec3 p = parse_vec(p_str, "--p");
    const bm::Vec3 q = parse_vec(q_str, "--q");
    const auto d = bm::shortcut_distance(sphere, scale, p, q);
    bm::ordered_json rec = {{"distance", d.value},
                            {"branch", d.branch == bm::Branch::Euclid ? "euclid" : "shortcut"},
                            {"alpha", bm::alpha(scale)}};
    std::cout << rec.dump() << "\n";
    return 0;
}

int cmd_ball_dist(const std::string& family_spec, const std::string& p_str,
                  const std::string& q_str, int nodes, int inter_nodes, uint64_t seed) {
    const bm::SphereFamily family = bm::parse_family_spec(family_spec);
    const bm::Vec3 p = parse_vec(p_str, "--p");
    const bm::Vec3 q = parse_vec(q_str, "--q");
    const bm::DiscretizationConfig cfg{nodes, inter_nodes, seed};
    const auto est = bm::estimate_distance(family, p, q, cfg);
    bm::ordered_json rec = {
        {"upper", est.upper}, {"lower", est.lower}, {"witness", bm::to_json(est.witness)}};
    std::cout << rec.dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, long samples, uint64_t seed, double tol) {
    const auto report = bm::run_suite(suite, samples, seed, tol);
    if (!report) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 2;
    }
    std::cout << bm::to_json(*report).dump() << "\n";
    return report->pass() ? 0 : 1;
}

int cmd_nm_scan(const std::string& fn_spec, int n, int samples, int candidates, uint64_t seed,
                const std::string& out_path) {
    const auto f = bm::parse_boundary_function_ex(fn_spec);
    const auto scan = bm::nm_scan(f, n, samples, seed, candidates);
    std::string text = bm::witness_csv(scan.witnesses, n);
    char summary[128];
    std::snprintf(summary, sizeof summary, "# samples=%zu witnesses=%ld max_margin=%s\n",
                  scan.samples.size(), scan.hit_count, bm::csv_double(scan.max_margin).c_str());
    text += summary;
    emit(text, out_path);
    return 0;
}

int cmd_converge(const std::string& family_spec, const std::string& p_str,
                 const std::string& q_str, const std::string& nodes_list, int inter_nodes,
                 uint64_t seed, const std::string& out_path) {
    const bm::SphereFamily family = bm::parse_family_spec(family_spec);
    const bm::Vec3 p = parse_vec(p_str, "--p");
    const bm::Vec3 q = parse_vec(q_str, "--q");
    std::vector<bm::DiscretizationConfig> cfgs;
    size_t pos = 0;
    while (pos < nodes_list.size()) {
        size_t next = nodes_list.find(',', pos);
        const std::string tok = nodes_list.substr(pos, next == std::string::npos ? next : next - pos);
        cfgs.push_back({std::stoi(tok), inter_nodes, seed});
        pos = (next == std::string::npos) ? nodes_list.size() : next + 1;
    }
    const auto rows = bm::convergence_study(family, p, q, cfgs);
    emit(bm::convergence_csv(rows), out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shortcut-sphere and chain-infimum ball metrics"};
    app.require_subcommand(1);

    // sphere-dist
    auto* sd = app.add_subcommand("sphere-dist", "evaluate d^s on a sphere of radius r about O");
    double sd_r = 1.0, sd_s = 1.0;
    std::string sd_p, sd_q;
    sd->add_option("--r", sd_r, "sphere radius")->capture_default_str();
    sd->add_option("--s", sd_s, "shortcut scale in (0,1]")->required();
    sd->add_option("--p", sd_p, "first point x,y,z")->required();
    sd->add_option("--q", sd_q, "second point x,y,z")->required();

    // ball-dist
    auto* bd = app.add_subcommand("ball-dist", "bracket d^{Lambda,s}(P,Q)");
    std::string bd_family, bd_p, bd_q;
    int bd_nodes = 64, bd_inter = 8;
    uint64_t bd_seed = 0;
    bd->add_option("--family", bd_family,
                   "family file, segment-cover:t=..,s0=.., or boundary:f=..")
        ->required();
    bd->add_option("--p", bd_p, "first point x,y,z")->required();
    bd->add_option("--q", bd_q, "second point x,y,z")->required();
    bd->add_option("--nodes", bd_nodes, "nodes per sphere")->capture_default_str();
    bd->add_option("--intersection-nodes", bd_inter, "nodes per intersection circle")
        ->capture_default_str();
    bd->add_option("--seed", bd_seed, "sampling seed")->capture_default_str();

    // verify
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    std::string vf_suite;
    long vf_samples = 0;
    uint64_t vf_seed = 0;
    double vf_tol = -1.0;
    vf->add_option("--suite", vf_suite, "suite name")->required();
    vf->add_option("--samples", vf_samples, "sample count (0 = suite default)");
    vf->add_option("--seed", vf_seed, "seed")->capture_default_str();
    vf->add_option("--tol", vf_tol, "tolerance override (suite default if omitted)");

    // nm-scan
    auto* nm = app.add_subcommand("nm-scan", "scan for NM^n_f witnesses");
    std::string nm_fn, nm_out;
    int nm_n = 1, nm_samples = 1000, nm_cands = 4000;
    uint64_t nm_seed = 0;
    nm->add_option("--function", nm_fn,
                   "catalog function, e.g. spike:x0=0,0,1:h=1:r=0.05 or table:file=ft.json")
        ->required();
    nm->add_option("--n", nm_n, "Lipschitz factor n")->required();
    nm->add_option("--samples", nm_samples, "scan samples")->capture_default_str();
    nm->add_option("--candidates", nm_cands, "candidate points per sample")->capture_default_str();
    nm->add_option("--seed", nm_seed, "seed")->capture_default_str();
    nm->add_option("--out", nm_out, "write CSV here instead of stdout");

    // converge
    auto* cv = app.add_subcommand("converge", "upper bounds under nested refinement");
    std::string cv_family, cv_p, cv_q, cv_nodes = "100,400,1600", cv_out;
    int cv_inter = 8;
    uint64_t cv_seed = 0;
    cv->add_option("--family", cv_family, "family selector")->required();
    cv->add_option("--p", cv_p, "first point x,y,z")->required();
    cv->add_option("--q", cv_q, "second point x,y,z")->required();
    cv->add_option("--nodes", cv_nodes, "comma list of nodes_per_sphere")->capture_default_str();
    cv->add_option("--intersection-nodes", cv_inter, "nodes per intersection circle")
        ->capture_default_str();
    cv->add_option("--seed", cv_seed, "seed")->capture_default_str();
    cv->add_option("--out", cv_out, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
        if (*sd) return cmd_sphere_dist(sd_r, sd_s, sd_p, sd_q);
        if (*bd) return cmd_ball_dist(bd_family, bd_p, bd_q, bd_nodes, bd_inter, bd_seed);
        if (*vf) return cmd_verify(vf_suite, vf_samples, vf_seed, vf_tol);
        if (*nm) return cmd_nm_scan(nm_fn, nm_n, nm_samples, nm_cands, nm_seed, nm_out);
        if (*cv) return cmd_converge(cv_family, cv_p, cv_q, cv_nodes, cv_inter, cv_seed, cv_out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
