#include "nodalpart/json_io.hpp"

#include <fstream>
#include <numbers>
#include <string>

#include "nodalpart/errors.hpp"

namespace nodalpart {

namespace {

Gluing gluing_from_string(const std::string& s) {
    if (s == "open") return Gluing::open;
    if (s == "periodic") return Gluing::periodic;
    if (s == "reversed") return Gluing::reversed;
    throw InvalidInput("unknown gluing '" + s + "'");
}

template <class T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("field '") + key + "': " + e.what());
    }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key) || j.at(key).is_null()) return fallback;
    return get_field<T>(j, key);
}

json factor_json(const TrigFactor& f) {
    return {{"k", f.kind == Trig::sin ? "sin" : "cos"}, {"m", f.freq}, {"p", f.phase}};
}

TrigFactor factor_from_json(const json& j) {
    TrigFactor f;
    const auto k = get_field<std::string>(j, "k");
    if (k == "sin") {
        f.kind = Trig::sin;
    } else if (k == "cos") {
        f.kind = Trig::cos;
    } else {
        throw InvalidInput("trig kind must be sin or cos, got '" + k + "'");
    }
    f.freq = get_field<int>(j, "m");
    f.phase = get_or<double>(j, "p", 0.0);
    return f;
}

}  // namespace

json to_json(const SurfaceSpec& s) {
    json j;
    j["surface"] = std::string(to_string(s.kind()));
    j["width"] = s.width;
    j["height"] = s.height;
    if (!(s == SurfaceSpec::preset(s.kind(), s.width, s.height))) {
        j["x_gluing"] = std::string(to_string(s.x_gluing));
        j["y_gluing"] = std::string(to_string(s.y_gluing));
    }
    return j;
}

SurfaceSpec surface_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInput("surface must be a JSON object");
    const int w = get_field<int>(j, "width");
    const int h = get_field<int>(j, "height");
    SurfaceSpec s;
    if (j.contains("x_gluing") || j.contains("y_gluing")) {
        s.width = w;
        s.height = h;
        s.x_gluing = gluing_from_string(get_field<std::string>(j, "x_gluing"));
        s.y_gluing = gluing_from_string(get_field<std::string>(j, "y_gluing"));
    } else {
        s = SurfaceSpec::preset(get_field<std::string>(j, "surface"), w, h);
    }
    s.validate();
    return s;
}

json to_json(const Partition& p) {
    json j;
    j["surface"] = to_json(p.complex().spec());
    j["labels"] = p.domains();
    j["walls"] = json::array();
    if (p.has_walls()) j["walls"].push_back(p.walls());
    return j;
}

Partition partition_from_json(const json& j) {
    const auto spec = surface_from_json(j.contains("surface") ? j.at("surface") : json());
    const auto labels = get_field<std::vector<int>>(j, "labels");
    std::vector<int> walls;
    if (j.contains("walls")) {
        for (const auto& item : j.at("walls")) {
            if (item.is_array()) {
                for (const auto& e : item) {
                    if (!e.is_number_integer()) throw InvalidInput("wall edge ids must be integers");
                    walls.push_back(e.get<int>());
                }
            } else if (item.is_number_integer()) {
                walls.push_back(item.get<int>());
            } else {
                throw InvalidInput("walls must be edge ids or lists of edge ids");
            }
        }
    }
    return Partition::from_labels(build_complex(spec), labels, walls);
}

json to_json(const InvariantReport& r) {
    return {{"kappa", r.kappa},   {"beta", r.beta},   {"sigma", r.sigma},
            {"omega", r.omega},   {"delta", r.delta}, {"defect", r.defect()},
            {"beta_interior", r.beta_interior}};
}

json to_json(const Verdict& v) {
    json j;
    j["surface"] = std::string(to_string(v.kind));
    j["status"] = std::string(to_string(v.status));
    j["expected_defect"] = v.expected_defect ? json(*v.expected_defect) : json(nullptr);
    j["measured_defect"] = v.measured_defect;
    if (v.status == VerdictStatus::conjecture) j["matches_conjecture"] = v.matches_expected();
    return j;
}

json to_json(const DomainReport& d) {
    return {{"id", d.id},
            {"faces", d.faces},
            {"chi", d.chi},
            {"orientable", d.orientable},
            {"boundary_circles", d.boundary_circles},
            {d.orientable ? "genus" : "crosscaps", d.genus},
            {"classification", d.classification()}};
}

json to_json(const ChiSigmaReport& r) {
    return {{"chi_surface", r.chi_surface}, {"sigma", r.sigma}, {"chi_domains", r.chi_domains}, {"holds", r.holds()}};
}

json to_json(const CoverReport& r) {
    json flags;
    flags["orientable_case"] = {{"applicable", r.orientable_case_applicable()},
                                {"holds", r.orientable_case_holds()},
                                {"relation", "beta_star = 2 beta_i - 1"}};
    flags["nonorientable_case"] = {{"applicable", r.nonorientable_case_applicable()},
                                   {"holds", r.nonorientable_case_holds()},
                                   {"relation", "beta_star = 2 beta"}};
    flags["boundary_circles_joined"] = r.boundary_circles_joined;
    return {{"kappa", r.kappa},
            {"sigma", r.sigma},
            {"beta", r.beta},
            {"kappa_star", r.kappa_star},
            {"sigma_star", r.sigma_star},
            {"beta_star", r.beta_star},
            {"n_nonorientable", r.n_nonorientable},
            {"beta_i", r.beta_i},
            {"beta_i_star", r.beta_i_star},
            {"preimage_counts", r.preimage_counts},
            {"relation_flags", flags}};
}

json to_json(const CutPath& path) {
    return {{"edges", path.edges},
            {"vertices", path.vertices},
            {"start", std::string(to_string(path.start))},
            {"end", std::string(to_string(path.end))},
            {"crossings", path.crossings}};
}

json to_json(const ComplementClass& c) {
    json pieces = json::array();
    for (const auto& p : c.pieces) {
        std::string kind = p.is_disk() ? "disk" : p.is_moebius_band() ? "moebius" : "other";
        pieces.push_back({{"faces", p.faces},
                          {"chi", p.chi},
                          {"orientable", p.orientable},
                          {"boundary_circles", p.boundary_circles},
                          {"kind", kind}});
    }
    std::string verdict = c.one_disk() ? "one-disk" : c.disk_and_moebius() ? "disk+moebius" : "invalid";
    return {{"components", c.components()}, {"pieces", pieces}, {"class", verdict}};
}

json to_json(const TransitionEstimate& t) {
    return {{"beta", t.beta},
            {"theta_low", t.theta_low},
            {"theta_high", t.theta_high},
            {"width", t.width()},
            {"omega_low", 0},
            {"omega_high", 1},
            {"resolution_low", t.resolution_low},
            {"resolution_high", t.resolution_high},
            {"iterations", t.iterations},
            {"skipped_unstable", t.skipped_unstable}};
}

json to_json(const BatchStats& s) {
    json hist = json::object();
    for (const auto& [defect, n] : s.defect_histogram) hist[std::to_string(defect)] = n;
    json cex = json::array();
    for (std::size_t k = 0; k < s.counterexamples.size(); ++k) {
        cex.push_back({{"message", s.failures[k]}, {"partition", to_json(s.counterexamples[k])}});
    }
    const SurfaceKind kind = s.surface.kind();
    std::string verdict = "pass";
    if (s.conjecture > 0) {
        verdict = "conjecture";
    } else if (s.report_only > 0) {
        verdict = "report-only";
    }
    if (!s.all_passed()) verdict = "fail";
    json j = {{"surface", to_json(s.surface)},
              {"runs", s.runs},
              {"pass", s.pass},
              {"fail", s.fail},
              {"report_only", s.report_only},
              {"conjecture", s.conjecture},
              {"conjecture_matches", s.conjecture_matches},
              {"chi_sigma_ok", s.chi_sigma_ok},
              {"defect_histogram", hist},
              {"verdict", verdict},
              {"failures", s.failures},
              {"counterexamples", cex}};
    if (kind == SurfaceKind::moebius || kind == SurfaceKind::klein) {
        j["cover_checked"] = s.cover_checked;
        j["cover_agree"] = s.cover_agree;
        j["max_nonorientable"] = s.max_nonorientable;
    }
    return j;
}

json to_json(const SweepRow& row, SurfaceKind surface) {
    json j;
    j["param"] = row.param;
    if (!row.stable) {
        j["status"] = "unstable";
        j["error"] = row.error;
        return j;
    }
    j["status"] = "stable";
    j["resolution"] = row.stable->resolution;
    j.update(to_json(row.stable->report));
    j["verdict"] = std::string(to_string(verify_euler(surface, row.stable->report).status));
    return j;
}

json singular_json(const CellComplex& c, const BoundaryGraph& g) {
    json out = json::array();
    for (const auto& s : g.singular) {
        const auto at = c.vertex_representative(s.vertex);
        out.push_back({{"vertex", s.vertex},
                       {"i", at[0]},
                       {"j", at[1]},
                       {"on_surface_boundary", s.on_surface_boundary},
                       {"valence", s.valence},
                       {"index", s.index}});
    }
    return out;
}

json partition_report(const Partition& p) {
    const auto g = boundary_graph(p);
    const auto inv = invariants(p, g);
    json j;
    j["surface"] = to_json(p.complex().spec());
    j.update(to_json(inv));
    j["walls"] = static_cast<int>(p.walls().size());
    j["singular"] = singular_json(p.complex(), g);
    json domains = json::array();
    for (const auto& d : domain_reports(p)) domains.push_back(to_json(d));
    j["domains"] = domains;
    j["chi_sigma"] = to_json(check_chi_sigma(p));
    j["normal"] = is_normal(p);
    return j;
}

json to_json(const Eigenfunction& f) {
    json terms = json::array();
    for (const auto& t : f.terms) terms.push_back({{"c", t.coeff}, {"fx", factor_json(t.fx)}, {"fy", factor_json(t.fy)}});
    return {{"terms", terms}};
}

Eigenfunction eigenfunction_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInput("eigenfunction must be a JSON object");
    if (j.contains("family")) {
        const Family fam = family_from_string(get_field<std::string>(j, "family"));
        switch (fam) {
            case Family::bands: return Eigenfunction::bands(get_field<int>(j, "m"));
            case Family::ex3b: return Eigenfunction::ex3b(get_field<double>(j, "theta"));
            case Family::phi: return Eigenfunction::phi(get_field<double>(j, "beta"), get_field<double>(j, "theta"));
        }
    }
    if (!j.contains("terms") || !j.at("terms").is_array() || j.at("terms").empty()) {
        throw InvalidInput("eigenfunction needs a non-empty 'terms' array or a 'family'");
    }
    Eigenfunction f;
    for (const auto& t : j.at("terms")) {
        f.terms.push_back({get_field<double>(t, "c"), factor_from_json(get_field<json>(t, "fx")), factor_from_json(get_field<json>(t, "fy"))});
    }
    return f;
}

std::vector<int> edge_list_from_json(const CellComplex& c, const json& j) {
    if (j.contains("edges")) {
        auto edges = get_field<std::vector<int>>(j, "edges");
        for (int e : edges) {
            if (e < 0 || e >= c.num_edges()) throw InvalidInput("edge id " + std::to_string(e) + " out of range");
        }
        return edges;
    }
    if (j.contains("points")) {
        const auto pts = get_field<std::vector<std::array<int, 2>>>(j, "points");
        return edges_from_points(c, pts);
    }
    throw InvalidInput("expected 'edges' or 'points'");
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

}  // namespace nodalpart
