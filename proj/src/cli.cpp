#include "currentlab/cli.hpp"

#include "currentlab/dual.hpp"
#include "currentlab/errors.hpp"
#include "currentlab/finsler.hpp"
#include "currentlab/io.hpp"
#include "currentlab/mobius.hpp"
#include "currentlab/periodic.hpp"
#include "currentlab/svg.hpp"
#include "currentlab/tropical.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace currentlab {

namespace {

class UsageError : public CurrentlabError {
public:
    using CurrentlabError::CurrentlabError;
    const char* kind() const noexcept override { return "UsageError"; }
};

struct Options {
    std::string out_path;
    std::string file;
    std::string mass;
    std::string svg;
    unsigned seed = 0;
    int n = 2;
    unsigned threads = 1;
    long budget = 0;
    long m = 1;
    bool symmetrized = false;
    bool rank2 = false;
    std::string pair_file;
    std::vector<std::string> points;
    std::vector<std::string> potential;
    std::string south_height;
    int trials = 100;
    double tol = 0;
    int length = 2;
    std::vector<double> coords;
    std::vector<std::string> map_entries;
    std::string config;
    std::string polyline;
};

struct Result {
    Json report;
    int code = kExitOk;
};

NamedCurrent load_disk(const std::string& path) {
    Json j = read_json_file(path);
    if (is_periodic_json(j)) throw ParseError("'" + path + "' holds a periodic current; expected a disk current");
    return current_from_json(j);
}

Rational mass_level(const Options& o, const DiscreteCurrent& mu) {
    if (!o.mass.empty()) return parse_rational(o.mass);
    if (is_symmetric(mu)) return mu.total_mass() / 2;
    throw UsageError("--mass is required for a current that is not symmetric");
}

BoundaryPoint parse_point(const std::string& text) {
    Rational a = parse_rational(text);
    if (a < 0 || a >= 1) throw ValidationError("boundary point " + text + " outside [0,1)");
    return BoundaryPoint(a);
}

ProjectivePoint parse_projective(const std::string& text) {
    if (text == "inf") return ProjectivePoint::inf();
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used == text.size() && std::isfinite(v)) return ProjectivePoint::at(v);
    } catch (const std::exception&) {
    }
    throw ParseError("malformed projective point '" + text + "'");
}

Json projective_json(const ProjectivePoint& p) { return p.infinite ? Json("inf") : Json(p.x); }

MobiusMap map_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 4) throw ParseError(where + ": expected [a, b, c, d]");
    for (const auto& v : j)
        if (!v.is_number()) throw ParseError(where + ": entries must be numbers");
    return MobiusMap(j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>());
}

void maybe_svg(const Options& o, const std::string& svg) {
    if (!o.svg.empty()) write_text_file(o.svg, svg);
}

Json names_of(std::uint64_t mask, const NamedCurrent& named) {
    Json out = Json::array();
    for (size_t i = 0; i < named.mu.size(); ++i)
        if (mask >> i & 1) out.push_back(named.name_of(named.mu.chord(i)));
    return out;
}

Result cmd_check(const Options& o) {
    Json j = read_json_file(o.file);
    if (is_periodic_json(j)) {
        auto mu = periodic_from_json(j);
        auto [up, down] = mu.crossing_weights();
        return {{{"command", "check"},
                 {"model", "periodic"},
                 {"valid", true},
                 {"orbits", mu.orbits().size()},
                 {"up_weight", to_string(up)},
                 {"down_weight", to_string(down)},
                 {"current", periodic_to_json(mu)}}};
    }
    auto named = current_from_json(j);
    maybe_svg(o, render_current_svg(named, nullptr, o.seed));
    return {{{"command", "check"},
             {"model", "disk"},
             {"valid", true},
             {"chords", named.mu.size()},
             {"mass", to_string(named.mu.total_mass())},
             {"symmetric", is_symmetric(named.mu)},
             {"lamination", is_lamination(named.mu)},
             {"current", current_to_json(named)}}};
}

Result cmd_rank(const Options& o) {
    auto named = load_disk(o.file);
    HolonomyContext ctx(named.mu, mass_level(o, named.mu));
    RankReport r = certify_tropical_rank(ctx, o.n, CertifyOptions{std::max(1u, o.threads), true});
    Json report{{"command", "rank"},     {"n", o.n},
                {"mass", to_string(ctx.T())}, {"certified", r.certified},
                {"vacuous", r.vacuous},  {"tuples_checked", r.tuples_checked}};
    if (r.witness) {
        Json xs = Json::array(), ys = Json::array();
        for (const auto& p : r.witness->xs) xs.push_back(to_string(p.angle()));
        for (const auto& p : r.witness->ys) ys.push_back(to_string(p.angle()));
        report["witness"] = {{"xs", xs}, {"ys", ys}, {"permutation", r.witness->permutation},
                             {"value", to_string(r.witness->value)}};
    }
    if (auto f = forbidden_scan(named.mu, o.n)) {
        Json chords = Json::array();
        for (const auto& c : *f) chords.push_back(named.name_of(c));
        report["forbidden_configuration"] = chords;
    }
    return {report, r.certified ? int(kExitOk) : int(kExitViolated)};
}

size_t budget_of(const Options& o) {
    if (o.budget < 0) throw UsageError("--budget must be positive");
    return o.budget > 0 ? size_t(o.budget) : enumeration_budget();
}

Result cmd_dual(const Options& o) {
    auto named = load_disk(o.file);
    HolonomyContext ctx(named.mu, mass_level(o, named.mu));
    DualComplex cx = enumerate_complex(ctx, budget_of(o));
    Json faces = Json::array();
    for (size_t f = 0; f < cx.faces.size(); ++f)
        faces.push_back({{"L", names_of(cx.faces[f].L, named)},
                         {"F", names_of(cx.faces[f].F, named)},
                         {"U", names_of(cx.faces[f].U, named)},
                         {"dim", cx.dims[f]},
                         {"maximal", bool(cx.maximal[f])}});
    Json vertices = Json::array();
    for (const auto& v : cx.vertices) vertices.push_back(submeasure_to_json(v, named));
    Json edges = Json::array();
    for (auto [a, b] : cx.edges)
        edges.push_back({{"a", a}, {"b", b}, {"length", to_string(metric_d(cx.vertices[a], cx.vertices[b]))}});
    maybe_svg(o, render_current_svg(named, &cx, o.seed));
    return {{{"command", "dual"},
             {"mass", to_string(cx.T)},
             {"dimension", cx.dimension},
             {"face_count", cx.faces.size()},
             {"faces", faces},
             {"vertices", vertices},
             {"edges", edges}}};
}

Result cmd_metric(const Options& o) {
    auto named = load_disk(o.file);
    auto mu = share(named.mu);
    HolonomyContext ctx(mu, mass_level(o, named.mu));
    Json report{{"command", "metric"}, {"mass", to_string(ctx.T())}};
    if (!o.pair_file.empty()) {
        Json j = read_json_file(o.pair_file);
        auto get = [&](const char* key) -> const Json& {
            if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("pair file: missing key '") + key + "'");
            return j[key];
        };
        auto nu1 = submeasure_from_json(get("nu1"), named, mu), nu2 = submeasure_from_json(get("nu2"), named, mu);
        auto offset = [&](const char* key) {
            if (!j.contains(key)) return Rational(0);
            if (!j[key].is_string()) throw ParseError(std::string("pair file: '") + key + "' must be a rational string");
            return parse_rational(j[key].get<std::string>());
        };
        report["d"] = to_string(metric_d(ctx, nu1, nu2));
        report["d_reverse"] = to_string(metric_d(ctx, nu2, nu1));
        LPoint a{nu1, offset("offset1")}, b{nu2, offset("offset2")};
        report["relative"] = {{"forward", to_string(relative_distance(a, b))},
                              {"backward", to_string(relative_distance(b, a))}};
        if (o.rank2) report["rank2"] = to_string(rank2_distance(nu1, nu2));
        return {report};
    }
    DualComplex cx = enumerate_complex(ctx, budget_of(o));
    Json rows = Json::array();
    for (const auto& a : cx.vertices) {
        Json row = Json::array();
        for (const auto& b : cx.vertices) row.push_back(to_string(metric_d(a, b)));
        rows.push_back(row);
    }
    report["vertices"] = cx.vertices.size();
    report["distances"] = rows;
    if (o.rank2) {
        bool agree = true;
        for (const auto& a : cx.vertices)
            for (const auto& b : cx.vertices) agree = agree && rank2_distance(a, b) == metric_d(a, b);
        report["rank2_agrees"] = agree;
        if (!agree) return {report, kExitViolated};
    }
    return {report};
}

Result cmd_triple(const Options& o) {
    auto named = load_disk(o.file);
    HolonomyContext ctx(named.mu, mass_level(o, named.mu));
    Json report{{"command", "triple-ratio"}, {"mass", to_string(ctx.T())}};
    if (!o.points.empty()) {
        if (o.points.size() != 3) throw UsageError("--points takes exactly three boundary points");
        report["value"] = to_string(triple_ratio(ctx, parse_point(o.points[0]), parse_point(o.points[1]), parse_point(o.points[2])));
        return {report};
    }
    auto gaps = sample_gaps(named.mu);
    size_t count = 0, nonzero = 0;
    Rational max_abs(0);
    for (size_t a = 0; a < gaps.size(); ++a)
        for (size_t b = a + 1; b < gaps.size(); ++b)
            for (size_t c = b + 1; c < gaps.size(); ++c) {
                Rational v = triple_ratio(ctx, gaps[a], gaps[b], gaps[c]);
                ++count;
                if (v != 0) {
                    if (!nonzero)
                        report["example"] = {{"x", to_string(gaps[a].angle())}, {"y", to_string(gaps[b].angle())},
                                             {"z", to_string(gaps[c].angle())}, {"value", to_string(v)}};
                    ++nonzero;
                }
                max_abs = std::max<Rational>(max_abs, abs(v));
            }
    report["triples"] = count;
    report["nonzero"] = nonzero;
    report["max_abs"] = to_string(max_abs);
    report["vanish"] = nonzero == 0;
    return {report};
}

Result cmd_cross(const Options& o) {
    auto named = load_disk(o.file);
    HolonomyContext ctx(named.mu, mass_level(o, named.mu));
    if (o.points.size() != 4) throw UsageError("cross-ratio takes four boundary points x1 x2 y1 y2");
    std::vector<BoundaryPoint> p;
    for (const auto& s : o.points) p.push_back(parse_point(s));
    return {{{"command", "cross-ratio"},
             {"mass", to_string(ctx.T())},
             {"value", to_string(cross_ratio(ctx, p[0], p[1], p[2], p[3]))}}};
}

Result cmd_translation(const Options& o) {
    Json j = read_json_file(o.file);
    if (!is_periodic_json(j)) throw ParseError("translation-length expects a periodic current file");
    auto mu = periodic_from_json(j);
    Json report{{"command", "translation-length"}, {"m", o.m}, {"translation_length", to_string(translation_length(mu, o.m))}};
    int code = kExitOk;
    auto ref = default_reference(mu);
    if (o.symmetrized) {
        auto s = o.south_height.empty() ? symmetrized_period_check(mu)
                                        : symmetrized_period_check(mu, ref, parse_rational(o.south_height));
        report["symmetrized"] = {{"lhs", to_string(s.lhs)}, {"rhs", to_string(s.rhs)}, {"equal", s.lhs == s.rhs}};
        if (s.lhs != s.rhs) code = kExitViolated;
    }
    if (!o.potential.empty()) {
        if (o.potential.size() != 2) throw UsageError("--potential takes two periodic points");
        report["potential"] = to_string(periodic_potential(mu, ref, parse_locus(o.potential[0]), parse_locus(o.potential[1])));
    }
    return {report, code};
}

const char* configuration_name(AxisConfiguration c) {
    switch (c) {
        case AxisConfiguration::Crossing: return "crossing";
        case AxisConfiguration::DisjointCoherent: return "disjoint_coherent";
        case AxisConfiguration::DisjointOpposed: return "disjoint_opposed";
    }
    return "unknown";
}

double rel_error(const IdentityCheck& c) { return std::fabs(c.lhs - c.rhs) / (1 + std::fabs(c.lhs)); }

Result cmd_abc(const Options& o) {
    if (o.trials < 1) throw UsageError("--trials must be positive");
    const double tol = o.tol > 0 ? o.tol : 1e-9;
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> u(-6, 6);
    double abc = 0, hilbert = 0;
    std::map<std::string, int> configs;
    for (int i = 0; i < o.trials; ++i) {
        auto pair = random_schottky_pair(rng);
        ++configs[configuration_name(pair.configuration)];
        abc = std::max(abc, rel_error(verify_abc(pair)));
        hilbert = std::max(hilbert, rel_error(hilbert_length_check(random_hyperbolic(rng), ProjectivePoint::at(u(rng)))));
    }
    bool pass = abc <= tol && hilbert <= tol;
    return {{{"command", "sl2 verify-abc"},
             {"seed", o.seed},
             {"trials", o.trials},
             {"tolerance", tol},
             {"max_rel_error_abc", abc},
             {"max_rel_error_hilbert", hilbert},
             {"configurations", configs},
             {"pass", pass}},
            pass ? int(kExitOk) : int(kExitViolated)};
}

Result cmd_veronese(const Options& o) {
    if (o.trials < 1) throw UsageError("--trials must be positive");
    const double tol = o.tol > 0 ? o.tol : 1e-8;
    std::mt19937_64 rng(o.seed);
    double top = 0, minor = INFINITY;
    for (int i = 0; i < o.trials; ++i) {
        auto [xs, ys] = random_veronese_tuple(rng, o.n);
        auto r = veronese_rank_check(o.n, xs, ys);
        top = std::max(top, r.max_rel_top_minor);
        minor = std::min(minor, r.min_rel_minor);
    }
    bool pass = top < tol && minor > tol;
    return {{{"command", "sl2 veronese"},
             {"n", o.n},
             {"trials", o.trials},
             {"tolerance", tol},
             {"max_rel_top_minor", top},
             {"min_rel_minor", minor},
             {"pass", pass}},
            pass ? int(kExitOk) : int(kExitViolated)};
}

Result cmd_period(const Options& o) {
    if (o.coords.size() != 4) throw UsageError("period takes four matrix entries a b c d");
    MobiusMap g(o.coords[0], o.coords[1], o.coords[2], o.coords[3]);
    auto fp = fixed_points(g);
    return {{{"command", "sl2 period"},
             {"trace", g.trace()},
             {"attracting", projective_json(fp.attracting)},
             {"repelling", projective_json(fp.repelling)},
             {"period", period(g)}}};
}

Result cmd_sl2_cross(const Options& o) {
    if (o.points.size() != 4) throw UsageError("cross-ratio takes four projective points");
    std::vector<ProjectivePoint> p;
    for (const auto& s : o.points) p.push_back(parse_projective(s));
    return {{{"command", "sl2 cross-ratio"}, {"log_cross_ratio", log_cross_ratio(p[0], p[1], p[2], p[3])}}};
}

Result cmd_export(const Options& o) {
    Json j = read_json_file(o.pair_file);
    if (!j.is_object() || !j.contains("a") || !j.contains("b")) throw ParseError("pair file needs keys 'a' and 'b'");
    auto pair = SchottkyPair::make(map_from_json(j["a"], "a"), map_from_json(j["b"], "b"));
    DiscreteCurrent mu = export_delta_current(pair, o.length);
    return {{{"command", "sl2 export"},
             {"length", o.length},
             {"configuration", configuration_name(pair.configuration)},
             {"chords", mu.size()},
             {"current", current_to_json(mu)}}};
}

Result cmd_finsler_dist(const Options& o) {
    if (o.coords.size() != 4) throw UsageError("dist takes four coordinates x1 y1 x2 y2");
    Complex p(o.coords[0], o.coords[1]), q(o.coords[2], o.coords[3]);
    return {{{"command", "finsler dist"}, {"distance", distance(p, q)}, {"reverse", distance(q, p)}}};
}

Result cmd_finsler_cross(const Options& o) {
    auto c = rays_from_json(read_json_file(o.config));
    double a = cross_ratio_from_pairings(c), b = cross_ratio_from_distances(c);
    bool agree = std::fabs(a - b) <= 1e-9;
    maybe_svg(o, render_finsler_svg({c.g1, c.g2, c.h1, c.h2}));
    return {{{"command", "finsler crossratio"}, {"pairing", a}, {"cross_distance", b}, {"agree", agree}},
            agree ? int(kExitOk) : int(kExitViolated)};
}

Result cmd_finsler_geodesic(const Options& o) {
    auto path = polyline_from_json(read_json_file(o.polyline));
    bool g = is_geodesic(path);
    Json roots = Json::array();
    for (size_t i = 0; i + 1 < path.size(); ++i) roots.push_back(maximizing_roots(path[i + 1] - path[i]));
    maybe_svg(o, render_finsler_svg({}, &path));
    return {{{"command", "finsler geodesic"},
             {"geodesic", g},
             {"length", finsler_length(path)},
             {"distance", distance(path.front(), path.back())},
             {"segment_roots", roots}},
            g ? int(kExitOk) : int(kExitViolated)};
}

void error_line(std::ostream& err, const std::string& kind, const std::string& message, int code) {
    err << Json{{"error", kind}, {"message", message}, {"exit", code}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with oriented geodesic currents", "currentlab"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--out", o.out_path, "Write the JSON report to this file");

    auto file_arg = [&](CLI::App* s) { s->add_option("file", o.file, "Current file (JSON)")->required(); };
    auto mass_opt = [&](CLI::App* s) { s->add_option("--mass,-T", o.mass, "Mass level T (rational)"); };

    auto* check = app.add_subcommand("check", "Validate a disk or periodic current");
    file_arg(check);
    check->add_option("--svg", o.svg, "Write the chord diagram");

    auto* rank = app.add_subcommand("rank", "Certify tropical rank n");
    file_arg(rank);
    mass_opt(rank);
    rank->add_option("--n", o.n, "Rank")->required();
    rank->add_option("--threads", o.threads, "Worker threads");

    auto* dual = app.add_subcommand("dual", "Enumerate the dual complex");
    file_arg(dual);
    mass_opt(dual);
    dual->add_option("--svg", o.svg, "Write chord diagram and 1-skeleton");
    dual->add_option("--seed", o.seed, "Layout seed");
    dual->add_option("--budget", o.budget, "Support-size budget");

    auto* metric = app.add_subcommand("metric", "Distances between holonomy-zero submeasures");
    file_arg(metric);
    mass_opt(metric);
    metric->add_option("--pair", o.pair_file, "JSON with nu1, nu2 and optional offset1, offset2");
    metric->add_flag("--rank2", o.rank2, "Also evaluate the rank-2 distance");
    metric->add_option("--budget", o.budget, "Support-size budget");

    auto* triple = app.add_subcommand("triple-ratio", "Triple ratios of the holonomy function");
    file_arg(triple);
    mass_opt(triple);
    triple->add_option("--points", o.points, "Three boundary points; default scans gap samples");

    auto* cross = app.add_subcommand("cross-ratio", "Cross ratio h(x1,x2;y1,y2)");
    file_arg(cross);
    mass_opt(cross);
    cross->add_option("points", o.points, "x1 x2 y1 y2")->required();

    auto* trans = app.add_subcommand("translation-length", "Translation length of the generator");
    file_arg(trans);
    trans->add_option("--m", o.m, "Power of the generator");
    trans->add_flag("--symmetrized", o.symmetrized, "Compare l(g)+l(g^-1) with the box cross ratio");
    trans->add_option("--south-height", o.south_height, "Height of x on the South side");
    trans->add_option("--potential", o.potential, "Two periodic points (gamma-, gamma+, N:h, S:h)");

    auto* sl2 = app.add_subcommand("sl2", "Numeric checks in SL(2,R)");
    sl2->require_subcommand(1);
    auto* abc = sl2->add_subcommand("verify-abc", "abc and hilbert-length identities on random samples");
    abc->add_option("--seed", o.seed);
    abc->add_option("--trials", o.trials);
    abc->add_option("--tol", o.tol, "Relative tolerance");
    auto* ver = sl2->add_subcommand("veronese", "Rank of Veronese potential matrices");
    ver->add_option("--n", o.n)->required();
    ver->add_option("--trials", o.trials);
    ver->add_option("--seed", o.seed);
    ver->add_option("--tol", o.tol, "Relative tolerance");
    auto* per = sl2->add_subcommand("period", "Fixed points and period of a hyperbolic map");
    per->add_option("entries", o.coords, "a b c d")->required()->expected(4);
    auto* lcr = sl2->add_subcommand("cross-ratio", "Log cross ratio of four projective points");
    lcr->add_option("points", o.points, "x1 x2 y1 y2 (inf allowed)")->required()->expected(4);
    auto* exp = sl2->add_subcommand("export", "Delta current of a Schottky pair");
    exp->add_option("--pair", o.pair_file, "JSON with maps a and b as [a, b, c, d]")->required();
    exp->add_option("--length", o.length, "Word length");

    auto* fin = app.add_subcommand("finsler", "The triangular Finsler plane");
    fin->require_subcommand(1);
    auto* fdist = fin->add_subcommand("dist", "Distance d(p, q)");
    fdist->add_option("coords", o.coords, "x1 y1 x2 y2")->required()->expected(4);
    auto* fcr = fin->add_subcommand("crossratio", "Cross ratio of four ray endpoints");
    fcr->add_option("--config", o.config, "Ray configuration JSON")->required();
    fcr->add_option("--svg", o.svg, "Write a plot");
    auto* fgeo = fin->add_subcommand("geodesic", "Geodesic test for a polyline");
    fgeo->add_option("--polyline", o.polyline, "Polyline JSON")->required();
    fgeo->add_option("--svg", o.svg, "Write a plot");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        error_line(err, "UsageError", e.what(), kExitInput);
        return kExitInput;
    }

    try {
        Result r;
        if (*check) r = cmd_check(o);
        else if (*rank) r = cmd_rank(o);
        else if (*dual) r = cmd_dual(o);
        else if (*metric) r = cmd_metric(o);
        else if (*triple) r = cmd_triple(o);
        else if (*cross) r = cmd_cross(o);
        else if (*trans) r = cmd_translation(o);
        else if (*abc) r = cmd_abc(o);
        else if (*ver) r = cmd_veronese(o);
        else if (*per) r = cmd_period(o);
        else if (*lcr) r = cmd_sl2_cross(o);
        else if (*exp) r = cmd_export(o);
        else if (*fdist) r = cmd_finsler_dist(o);
        else if (*fcr) r = cmd_finsler_cross(o);
        else if (*fgeo) r = cmd_finsler_geodesic(o);
        r.report["exit"] = r.code;
        std::string line = r.report.dump() + "\n";
        if (o.out_path.empty()) out << line;
        else write_text_file(o.out_path, line);
        return r.code;
    } catch (const ComplexityBudgetError& e) {
        error_line(err, e.kind(), e.what(), kExitBudget);
        return kExitBudget;
    } catch (const CurrentlabError& e) {
        error_line(err, e.kind(), e.what(), kExitInput);
        return kExitInput;
    } catch (const std::exception& e) {
        error_line(err, "InternalError", e.what(), kExitInternal);
        return kExitInternal;
    }
}

}  // namespace currentlab
