#include "nodalpart/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "nodalpart/cover.hpp"
#include "nodalpart/errors.hpp"
#include "nodalpart/explore.hpp"
#include "nodalpart/json_io.hpp"
#include "nodalpart/nodal.hpp"
#include "nodalpart/render.hpp"
#include "nodalpart/surgery.hpp"

namespace nodalpart::cli {

namespace {

namespace fs = std::filesystem;

json load(const std::string& path) {
    if (path == "-") {
        try {
            return json::parse(std::cin);
        } catch (const json::parse_error& e) {
            throw InvalidInput(std::string("stdin: ") + e.what());
        }
    }
    return read_json_file(path);
}

void write_file(const fs::path& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + path.string());
    f << bytes;
}

void write_render(const Partition& p, const fs::path& path, int cell) {
    RenderStyle style;
    style.cell = cell;
    const auto ext = path.extension().string();
    if (ext == ".ppm") {
        write_file(path, render_ppm(p, style));
    } else if (ext == ".svg") {
        write_file(path, render_svg(p, style));
    } else {
        throw InvalidInput("render target must end in .ppm or .svg: " + path.string());
    }
}

int verdict_exit(const Verdict& v) { return v.status == VerdictStatus::fail ? assertion_failed : ok; }

struct NodalArgs {
    std::string family;
    std::string function_file;
    double beta = std::numbers::pi / 6;
    double theta = 0.0;
    int m = 3;
    std::string surface = "moebius";
    int n = 64;
    int max_refine = -1;
    double zero_tol = 1e-12;
};

void add_nodal_options(CLI::App* sub, NodalArgs& a, bool with_function) {
    if (with_function) {
        sub->add_option("--family", a.family, "phi, bands or ex3b")->check(CLI::IsMember({"phi", "bands", "ex3b"}));
        sub->add_option("--function-file", a.function_file, "eigenfunction JSON (terms or family)");
        sub->add_option("--theta", a.theta, "theta for phi and ex3b");
        sub->add_option("--m", a.m, "frequency for bands");
    } else {
        sub->add_option("--family", a.family, "phi, bands or ex3b")
            ->required()
            ->check(CLI::IsMember({"phi", "bands", "ex3b"}));
    }
    sub->add_option("--beta", a.beta, "phase beta for phi")->capture_default_str();
    sub->add_option("--surface", a.surface, "moebius or rectangle")
        ->capture_default_str()
        ->check(CLI::IsMember({"moebius", "rectangle"}));
    sub->add_option("--n", a.n, "starting resolution (faces per side)")->capture_default_str()->check(CLI::Range(2, 8192));
    sub->add_option("--max-refine", a.max_refine, "refinement levels (default NODAL_MAX_REFINE or 5)")
        ->check(CLI::Range(1, 12));
    sub->add_option("--zero-tol", a.zero_tol, "face-center zero tolerance")->capture_default_str();
}

NodalConfig make_config(const NodalArgs& a) {
    NodalConfig cfg;
    cfg.resolution = a.n;
    cfg.zero_tol = a.zero_tol;
    cfg.max_refine = a.max_refine > 0 ? a.max_refine : max_refine_from_env();
    return cfg;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partition invariants and Euler-type formulas on flat quotient surfaces"};
    app.name("nodalpart");
    app.require_subcommand(1);
    app.fallthrough();
    bool compact = false;
    app.add_flag("--compact", compact, "single-line JSON");

    std::function<int()> action;
    const auto emit = [&](const json& j) { out << (compact ? j.dump() : j.dump(2)) << '\n'; };

    // invariants / verify
    std::string partition_path;
    auto* inv_cmd = app.add_subcommand("invariants", "invariants and domain classification of a partition");
    inv_cmd->add_option("partition", partition_path, "partition JSON, or - for stdin")->required();
    inv_cmd->callback([&] {
        action = [&] {
            emit(partition_report(partition_from_json(load(partition_path))));
            return int(ok);
        };
    });

    auto* verify_cmd = app.add_subcommand("verify", "check the Euler-type formula for the partition's surface");
    verify_cmd->add_option("partition", partition_path, "partition JSON, or - for stdin")->required();
    verify_cmd->callback([&] {
        action = [&] {
            const auto p = partition_from_json(load(partition_path));
            auto j = partition_report(p);
            const auto v = verify_euler(p);
            j["verdict"] = to_json(v);
            emit(j);
            if (!j["chi_sigma"]["holds"].get<bool>()) return int(assertion_failed);
            return verdict_exit(v);
        };
    });

    // nodal
    NodalArgs nodal;
    bool single = false;
    std::string render_out, partition_out;
    int cell = 4;
    auto* nodal_cmd = app.add_subcommand("nodal", "nodal partition of an eigenfunction");
    add_nodal_options(nodal_cmd, nodal, true);
    nodal_cmd->add_flag("--single", single, "use resolution N only, no stabilization");
    nodal_cmd->add_option("--render", render_out, "write an image (.ppm or .svg) of the final partition");
    nodal_cmd->add_option("--cell", cell, "pixels per face when rendering")->capture_default_str()->check(CLI::Range(1, 256));
    nodal_cmd->add_option("--partition-out", partition_out, "write the final partition as JSON");
    nodal_cmd->callback([&] {
        action = [&] {
            if (nodal.family.empty() == nodal.function_file.empty()) {
                throw InvalidInput("give exactly one of --family or --function-file");
            }
            json fn;
            Eigenfunction f;
            if (!nodal.function_file.empty()) {
                fn = load(nodal.function_file);
                f = eigenfunction_from_json(fn);
            } else {
                const Family fam = family_from_string(nodal.family);
                fn["family"] = nodal.family;
                if (fam == Family::phi) fn["beta"] = nodal.beta;
                if (fam == Family::bands) {
                    fn["m"] = nodal.m;
                } else {
                    fn["theta"] = nodal.theta;
                }
                f = family_member(fam, nodal.beta, fam == Family::bands ? nodal.m : nodal.theta);
            }
            fn.update(to_json(f));
            const SurfaceKind kind = surface_kind_from_string(nodal.surface);
            NodalConfig cfg = make_config(nodal);

            json j;
            j["function"] = fn;
            j["surface"] = nodal.surface;
            int resolution = cfg.resolution;
            json tried = json::array();
            if (single) {
                tried.push_back(resolution);
            } else {
                const auto st = stable_invariants(f, kind, cfg);
                resolution = st.resolution;
                tried = st.resolutions;
            }
            cfg.resolution = resolution;
            const auto p = rasterize(f, kind, cfg);
            const auto sym = check_symmetry(f, kind, cfg.symmetry_tol);
            j["symmetry"] = {{"deck_residual", sym.deck_residual}, {"dirichlet_residual", sym.dirichlet_residual}};
            j["resolution"] = resolution;
            j["resolutions"] = tried;
            j["stabilized"] = !single;
            j.update(partition_report(p));
            j["surface"] = to_json(p.complex().spec());
            const auto v = verify_euler(p);
            j["verdict"] = to_json(v);
            if (!render_out.empty()) write_render(p, render_out, cell);
            if (!partition_out.empty()) write_file(partition_out, to_json(p).dump() + "\n");
            emit(j);
            if (!j["chi_sigma"]["holds"].get<bool>()) return int(assertion_failed);
            return verdict_exit(v);
        };
    });

    // sweep
    NodalArgs sw;
    double from = 0.02, to = std::numbers::pi / 2 - 0.02;
    int count = 25;
    std::vector<double> params;
    auto* sweep_cmd = app.add_subcommand("sweep", "stabilized invariants over a parameter range");
    add_nodal_options(sweep_cmd, sw, false);
    sweep_cmd->add_option("--from", from, "first parameter")->capture_default_str();
    sweep_cmd->add_option("--to", to, "last parameter")->capture_default_str();
    sweep_cmd->add_option("--count", count, "number of evenly spaced parameters")->capture_default_str()->check(CLI::Range(1, 100000));
    sweep_cmd->add_option("--params", params, "explicit parameter list (overrides --from/--to/--count)")->delimiter(',');
    sweep_cmd->callback([&] {
        action = [&] {
            std::vector<double> ps = params;
            if (ps.empty()) {
                for (int k = 0; k < count; ++k) ps.push_back(count == 1 ? from : from + (to - from) * k / (count - 1));
            }
            const SurfaceKind kind = surface_kind_from_string(sw.surface);
            const auto rows = sweep(family_from_string(sw.family), sw.beta, ps, kind, make_config(sw));
            json j;
            j["family"] = sw.family;
            j["beta"] = sw.beta;
            j["surface"] = sw.surface;
            j["rows"] = json::array();
            int failed = 0, unstable = 0;
            for (const auto& r : rows) {
                j["rows"].push_back(to_json(r, kind));
                if (!r.stable) {
                    ++unstable;
                } else if (verify_euler(kind, r.stable->report).status == VerdictStatus::fail) {
                    ++failed;
                }
            }
            j["omega_steps"] = omega_steps(rows);
            j["unstable_rows"] = unstable;
            j["failed_rows"] = failed;
            emit(j);
            return failed > 0 ? int(assertion_failed) : int(ok);
        };
    });

    // bisect
    NodalArgs bi;
    double tol = 1e-3;
    auto* bisect_cmd = app.add_subcommand("bisect", "bracket the orientability transition theta(beta)");
    add_nodal_options(bisect_cmd, bi, false);
    bisect_cmd->add_option("--tol", tol, "target bracket width")->capture_default_str()->check(CLI::PositiveNumber);
    bisect_cmd->callback([&] {
        action = [&] {
            if (bi.surface != "moebius") throw InvalidInput("bisect runs on the Moebius strip");
            const auto est = bisect_transition(family_from_string(bi.family), bi.beta, tol, make_config(bi));
            json j = to_json(est);
            j["family"] = bi.family;
            j["tol"] = tol;
            emit(j);
            return int(ok);
        };
    });

    // random-check
    std::string rc_surface = "moebius", cex_dir;
    int rc_width = 32, rc_height = 32, rc_count = 1000, k_min = 1, k_max = 10;
    std::uint64_t seed = 0;
    auto* rc_cmd = app.add_subcommand("random-check", "verify the formula on seeded random partitions");
    rc_cmd->add_option("--surface", rc_surface, "surface preset")
        ->capture_default_str()
        ->check(CLI::IsMember({"rectangle", "cylinder", "moebius", "torus", "klein", "projective"}));
    rc_cmd->add_option("--width", rc_width, "grid width")->capture_default_str()->check(CLI::Range(2, 4096));
    rc_cmd->add_option("--height", rc_height, "grid height")->capture_default_str()->check(CLI::Range(2, 4096));
    rc_cmd->add_option("--count", rc_count, "number of partitions")->capture_default_str()->check(CLI::Range(0, 10000000));
    rc_cmd->add_option("--seed", seed, "batch seed")->capture_default_str();
    rc_cmd->add_option("--k-min", k_min, "fewest flood-fill seeds")->capture_default_str()->check(CLI::PositiveNumber);
    rc_cmd->add_option("--k-max", k_max, "most flood-fill seeds")->capture_default_str()->check(CLI::PositiveNumber);
    rc_cmd->add_option("--counterexamples", cex_dir, "directory for counterexample partition files");
    rc_cmd->callback([&] {
        action = [&] {
            const auto spec = SurfaceSpec::preset(rc_surface, rc_width, rc_height);
            spec.validate();
            const auto stats = batch_verify(spec, rc_count, seed, k_min, k_max);
            json j = to_json(stats);
            j["seed"] = seed;
            j["k_range"] = {k_min, k_max};
            if (!cex_dir.empty() && !stats.counterexamples.empty()) {
                fs::create_directories(cex_dir);
                for (std::size_t k = 0; k < stats.counterexamples.size(); ++k) {
                    write_file(fs::path(cex_dir) / ("counterexample_" + std::to_string(k) + ".json"),
                               to_json(stats.counterexamples[k]).dump() + "\n");
                }
            }
            emit(j);
            return stats.all_passed() ? int(ok) : int(assertion_failed);
        };
    });

    // cover-check
    auto* cover_cmd = app.add_subcommand("cover-check", "orientability and bookkeeping through the double cover");
    cover_cmd->add_option("partition", partition_path, "partition JSON on a Moebius strip or Klein bottle")->required();
    cover_cmd->callback([&] {
        action = [&] {
            const auto p = partition_from_json(load(partition_path));
            const auto cs = double_cover(p.complex_ptr());
            const auto parity = domain_orientability(p);
            const auto via_cover = omega_via_cover(cs, p);
            const auto report = cover_bookkeeping(cs, p);
            json j;
            j["surface"] = to_json(p.complex().spec());
            j["cover_surface"] = to_json(cs.cover->spec());
            j.update(to_json(report));
            j["domains"] = json::array();
            bool agree = true;
            for (int d = 0; d < p.num_domains(); ++d) {
                const bool same = parity[d] == via_cover[d];
                agree = agree && same;
                j["domains"].push_back({{"id", d},
                                        {"orientable_parity", static_cast<bool>(parity[d])},
                                        {"orientable_cover", static_cast<bool>(via_cover[d])},
                                        {"preimages", report.preimage_counts[d]},
                                        {"agree", same}});
            }
            j["agree"] = agree;
            emit(j);
            return agree ? int(ok) : int(assertion_failed);
        };
    });

    // circle
    std::string cycle_path;
    auto* circle_cmd = app.add_subcommand("circle", "complement of a simple closed curve in the projective plane");
    circle_cmd->add_option("cycle", cycle_path, "cycle JSON: {surface, edges | points}")->required();
    circle_cmd->callback([&] {
        action = [&] {
            const auto j = load(cycle_path);
            if (!j.contains("surface")) throw InvalidInput("cycle file needs a 'surface'");
            const auto c = build_complex(surface_from_json(j.at("surface")));
            const auto edges = edge_list_from_json(*c, j);
            json outj = to_json(classify_circle_complement(c, edges));
            outj["surface"] = to_json(c->spec());
            outj["cycle_length"] = edges.size();
            emit(outj);
            return int(ok);
        };
    });

    // normalize
    int factor = 3;
    std::string out_path;
    auto* norm_cmd = app.add_subcommand("normalize", "refine and separate non-normal vertices");
    norm_cmd->add_option("partition", partition_path, "partition JSON, or - for stdin")->required();
    norm_cmd->add_option("--factor", factor, "refinement factor")->capture_default_str()->check(CLI::Range(2, 16));
    norm_cmd->add_option("--out", out_path, "write the normalized partition as JSON");
    norm_cmd->callback([&] {
        action = [&] {
            const auto p = partition_from_json(load(partition_path));
            const auto q = normalize(p, factor);
            json j;
            j["before"] = partition_report(p);
            j["after"] = partition_report(q);
            j["factor"] = factor;
            j["non_normal_before"] = non_normal_vertices(p).size();
            j["delta_preserved"] = j["before"]["delta"] == j["after"]["delta"];
            j["omega_preserved"] = j["before"]["omega"] == j["after"]["omega"];
            if (!out_path.empty()) write_file(out_path, to_json(q).dump() + "\n");
            emit(j);
            return int(ok);
        };
    });

    // cut
    std::string path_path;
    auto* cut_cmd = app.add_subcommand("cut", "add a path of walls to a partition");
    cut_cmd->add_option("partition", partition_path, "partition JSON")->required();
    cut_cmd->add_option("path", path_path, "path JSON: {edges | points}")->required();
    cut_cmd->add_option("--out", out_path, "write the cut partition as JSON");
    cut_cmd->callback([&] {
        action = [&] {
            const auto p = partition_from_json(load(partition_path));
            const auto edges = edge_list_from_json(p.complex(), load(path_path));
            const auto path = classify_path(p, edges);
            const auto q = cut(p, path);
            const auto rep = cut_report(p, q, path);
            json j;
            j["surface"] = to_json(p.complex().spec());
            j["path"] = to_json(rep.path);
            j["before"] = to_json(rep.before);
            j["after"] = to_json(rep.after);
            j["delta_preserved"] = rep.delta_preserved();
            j["all_simply_connected_before"] = rep.all_simply_connected_before;
            j["kappa_bookkeeping"] = {{"applicable", rep.all_simply_connected_before},
                                      {"holds", rep.kappa_bookkeeping_holds()}};
            if (!out_path.empty()) write_file(out_path, to_json(q).dump() + "\n");
            emit(j);
            return int(ok);
        };
    });

    // render
    std::string image_out;
    int render_cell = 8;
    auto* render_cmd = app.add_subcommand("render", "draw a partition as PPM or SVG");
    render_cmd->add_option("partition", partition_path, "partition JSON, or - for stdin")->required();
    render_cmd->add_option("--out", image_out, "output image, .ppm or .svg")->required();
    render_cmd->add_option("--cell", render_cell, "pixels per face")->capture_default_str()->check(CLI::Range(1, 256));
    render_cmd->callback([&] {
        action = [&] {
            const auto p = partition_from_json(load(partition_path));
            write_render(p, image_out, render_cell);
            emit({{"out", image_out},
                  {"format", fs::path(image_out).extension() == ".ppm" ? "ppm" : "svg"},
                  {"bytes", fs::file_size(image_out)}});
            return int(ok);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    if (!action) {
        err << "error: no subcommand\n";
        return usage_error;
    }
    try {
        return action();
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const ResolutionError& e) {
        err << "numerical instability: " << e.what() << '\n';
        return instability;
    } catch (const InstabilityError& e) {
        err << "numerical instability: " << e.what() << '\n';
        return instability;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << '\n';
        return assertion_failed;
    } catch (const json::exception& e) {
        err << "invalid input: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return assertion_failed;
    }
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace nodalpart::cli
