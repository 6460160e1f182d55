// capforge: build, normalize and verify small complete caps in PG(N, q) for
// even q, and export them as parity-check matrices of quasi-perfect codes.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "capforge/arcs.hpp"
#include "capforge/caps.hpp"
#include "capforge/codes.hpp"
#include "capforge/io.hpp"

using nlohmann::json;
namespace cf = capforge;

namespace {

unsigned h_from_q(unsigned q) {
    if (q < 4 || q > 1024 || (q & (q - 1)) != 0)
        throw cf::bad_parameters("q must be a power of two in [4, 1024]");
    unsigned h = 0;
    for (unsigned t = q; t > 1; t >>= 1) ++h;
    return h;
}

/// Field + plane bundle with stable addresses.
struct plane_ctx {
    std::unique_ptr<cf::gf::field_ctx> f;
    std::unique_ptr<cf::pg::geometry> g;
    explicit plane_ctx(unsigned q, unsigned N = 2)
        : f(std::make_unique<cf::gf::field_ctx>(h_from_q(q))),
          g(std::make_unique<cf::pg::geometry>(*f, N)) {}
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json point_json(const cf::pg::point& p) {
    json a = json::array();
    for (unsigned i = 0; i < p.len; ++i) a.push_back(p.c[i]);
    return a;
}

json profile_json(const cf::arcs::arc_profile& prof) {
    json j;
    j["beta"] = prof.beta;
    if (prof.p)
        j["p"] = *prof.p;
    else
        j["p"] = nullptr;
    j["sum_points"] = json::array();
    for (const auto& sp : prof.sum_points) j["sum_points"].push_back(point_json(sp));
    j["s_infty"] = json(std::vector<unsigned>(prof.s_infty.begin(), prof.s_infty.end()));
    json sm = json::object();
    for (const auto& [m, diffs] : prof.s_m)
        sm[std::to_string(m)] = json(std::vector<unsigned>(diffs.begin(), diffs.end()));
    j["s_m"] = sm;
    j["cov_infty_size"] = prof.cov_infty.size();
    j["z_infty_covered"] = prof.z_infty_covered;
    j["affinely_complete"] = prof.affinely_complete;
    j["complete"] = prof.complete;
    j["uncovered_count"] = prof.uncovered.size();
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw cf::error("cannot open output file: " + path);
    os << content;
    if (!os) throw cf::error("write failed: " + path);
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw cf::parse_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

cf::arcs::plane_arc load_arc(const std::string& path, std::unique_ptr<plane_ctx>& ctx) {
    std::istringstream is(slurp(path));
    cf::io::arc_data d = cf::io::read_arc(is);
    ctx = std::make_unique<plane_ctx>(d.q);
    if (ctx->f->modulus() != d.modulus)
        throw cf::parse_error("arc file modulus " + cf::io::hex_string(d.modulus) +
                              " does not match the pinned modulus " +
                              cf::io::hex_string(ctx->f->modulus()) + " for q=" + std::to_string(d.q));
    return cf::arcs::make_plane_arc(*ctx->g, std::move(d.pts));
}

std::string arc_text(const cf::pg::geometry& g, const cf::arcs::plane_arc& K) {
    std::ostringstream os;
    cf::io::write_arc(os, g, K);
    return os.str();
}

/// Moves a complete arc into the position the first even-dimensional
/// construction wants: every point affine (an external line is sent to the
/// infinite line, which preserves completeness and makes the affine secants
/// do all the covering) and 1 outside the vertical-difference set.
cf::arcs::plane_arc to_affine_complete(const cf::pg::geometry& g, cf::arcs::plane_arc K) {
    const auto& f = g.field();
    auto apply = [&](const cf::pg::projectivity& A, const cf::arcs::plane_arc& arc) {
        std::vector<cf::pg::point> img;
        img.reserve(arc.pts.size());
        for (const auto& p : arc.pts) img.push_back(cf::pg::apply_projectivity(g, A, p));
        return cf::arcs::make_plane_arc(g, std::move(img));
    };

    bool has_infinite = false;
    for (const auto& p : K.pts) has_infinite |= (p.c[0] == 0);
    if (has_infinite) {
        // Find a line missing the arc and a matrix sending it to X_0 = 0.
        cf::pg::point ext;
        bool found = false;
        for (std::uint64_t r = 0; r < g.point_count() && !found; ++r) {
            cf::pg::point dual = g.unrank(r);
            bool hits = false;
            for (const auto& pt : K.pts) {
                cf::gf::elem s = 0;
                for (unsigned i = 0; i < 3; ++i)
                    s = static_cast<cf::gf::elem>(s ^ f.mul(dual.c[i], pt.c[i]));
                if (s == 0) { hits = true; break; }
            }
            if (!hits) { ext = dual; found = true; }
        }
        if (!found)
            throw cf::search_exhausted("the arc meets every line, so no affine position exists");
        static const unsigned basis_pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (const auto& bp : basis_pairs) {
            cf::pg::projectivity cand;
            cand.m = {ext.c[0], ext.c[1], ext.c[2], 0, 0, 0, 0, 0, 0};
            cand.m[3 + bp[0]] = 1;
            cand.m[6 + bp[1]] = 1;
            if (cf::pg::det(f, cand) != 0) {
                K = apply(cand, K);
                break;
            }
        }
    }

    cf::arcs::arc_profile prof = cf::arcs::profile(g, K);
    if (prof.s_infty.count(1)) {
        for (unsigned w = 2; w < f.q(); ++w) {
            if (prof.s_infty.count(static_cast<cf::gf::elem>(w))) continue;
            cf::pg::projectivity D = cf::pg::make_projectivity(
                f, {1, 0, 0, 0, 1, 0, 0, 0, f.inv(static_cast<cf::gf::elem>(w))});
            return apply(D, K);
        }
        throw cf::search_exhausted("every unit is a vertical difference of the arc");
    }
    return K;
}

struct arc_cmd_opts {
    unsigned q = 0;
    std::uint64_t seed = 1;
    unsigned iterations = 40;
    bool unchecked = false;
    std::string out;
};

int run_arc_family(const std::string& family, const arc_cmd_opts& o) {
    auto t0 = std::chrono::steady_clock::now();
    plane_ctx ctx(o.q);
    cf::arcs::plane_arc K;
    if (family == "greedy")
        K = cf::arcs::greedy_complete(*ctx.g, cf::arcs::plane_arc{}, o.seed, o.iterations);
    else if (family == "kw")
        K = cf::arcs::construct_kw(*ctx.g);
    else if (family == "kwprime")
        K = cf::arcs::construct_kw_prime(*ctx.g);
    else if (family == "abatangelo")
        K = cf::arcs::construct_abatangelo(*ctx.g, o.unchecked);
    else
        throw cf::bad_parameters("unknown arc family: " + family);

    cf::arcs::arc_profile prof = cf::arcs::profile(*ctx.g, K);
    json j;
    j["family"] = family;
    j["q"] = o.q;
    j["size"] = K.size();
    if (family == "greedy") {
        j["seed"] = o.seed;
        j["iterations"] = o.iterations;
    }
    j["profile"] = profile_json(prof);
    j["elapsed_ms"] = ms_since(t0);
    if (!o.out.empty()) write_text_file(o.out, arc_text(*ctx.g, K));
    emit(j);
    return 0;
}

int run_arc_profile(const std::string& in) {
    std::unique_ptr<plane_ctx> ctx;
    cf::arcs::plane_arc K = load_arc(in, ctx);
    json j;
    j["q"] = ctx->f->q();
    j["size"] = K.size();
    j["profile"] = profile_json(cf::arcs::profile(*ctx->g, K));
    emit(j);
    return 0;
}

int run_arc_verify(const std::string& in) {
    std::unique_ptr<plane_ctx> ctx;
    cf::arcs::plane_arc K = load_arc(in, ctx);  // throws not_an_arc on violation
    cf::arcs::arc_profile prof = cf::arcs::profile(*ctx->g, K);
    json j;
    j["q"] = ctx->f->q();
    j["size"] = K.size();
    j["is_arc"] = true;
    j["complete"] = prof.complete;
    j["beta"] = prof.beta;
    emit(j);
    return 0;
}

cf::arcs::norm_target parse_target(const std::string& name) {
    if (name == "sumpoint-001") return cf::arcs::norm_target::sumpoint_001;
    if (name == "sumpoint-011") return cf::arcs::norm_target::sumpoint_011;
    if (name == "sinf-no-one") return cf::arcs::norm_target::sinf_no_one;
    if (name == "parabola-clear") return cf::arcs::norm_target::parabola_clear;
    if (name == "star") return cf::arcs::norm_target::star;
    throw cf::bad_parameters(
        "unknown target '" + name +
        "' (expected sumpoint-001, sumpoint-011, sinf-no-one, parabola-clear or star)");
}

int run_arc_normalize(const std::string& in, const std::string& target, const std::string& out) {
    std::unique_ptr<plane_ctx> ctx;
    cf::arcs::plane_arc K = load_arc(in, ctx);
    cf::arcs::normalization n = cf::arcs::normalize_arc(*ctx->g, K, parse_target(target));
    cf::arcs::arc_profile prof = cf::arcs::profile(*ctx->g, n.arc);
    json j;
    j["q"] = ctx->f->q();
    j["target"] = target;
    j["integral"] = n.integral;
    j["size"] = n.arc.size();
    j["profile"] = profile_json(prof);
    if (!out.empty()) write_text_file(out, arc_text(*ctx->g, n.arc));
    emit(j);
    return 0;
}

struct cap_build_opts {
    std::string kase;
    std::string arc_file;
    unsigned q = 0;
    std::uint64_t seed = 1;
    unsigned iterations = 40;
    unsigned budget = 4000;
    unsigned dim = 0;
    std::string out;
};

int run_cap_build(const cap_build_opts& o) {
    auto t0 = std::chrono::steady_clock::now();
    const bool odd_case = (o.kase == "1o" || o.kase == "3o");
    const bool even_case = (o.kase == "1e" || o.kase == "2e" || o.kase == "3e");
    if (!odd_case && !even_case)
        throw cf::bad_parameters("unknown case '" + o.kase + "' (expected 1e, 2e, 3e, 1o or 3o)");
    if (o.dim < 4) throw cf::bad_parameters("--dim must be at least 4");
    if (even_case && o.dim % 2 != 0) throw cf::bad_parameters("even cases need an even --dim");
    if (odd_case && o.dim % 2 != 1) throw cf::bad_parameters("odd cases need an odd --dim");
    if (odd_case && o.dim < 5) throw cf::bad_parameters("odd cases need --dim >= 5");
    const unsigned s = even_case ? (o.dim - 2) / 2 : (o.dim - 3) / 2;
    if (s < 1) throw cf::bad_parameters("--dim too small for this case");

    std::unique_ptr<plane_ctx> ctx;
    cf::arcs::plane_arc K;
    bool pipeline = o.arc_file.empty();
    if (!pipeline) {
        K = load_arc(o.arc_file, ctx);  // strict: the arc is used as given
    } else {
        if (o.q == 0) throw cf::bad_parameters("provide --arc FILE or --q");
        ctx = std::make_unique<plane_ctx>(o.q);
        K = cf::arcs::greedy_complete(*ctx->g, cf::arcs::plane_arc{}, o.seed, o.iterations);
    }
    const auto& f = *ctx->f;
    const auto& g2 = *ctx->g;
    const std::size_t k = K.size();

    if (pipeline) {
        if (o.kase == "1e") {
            K = to_affine_complete(g2, std::move(K));
        } else if (o.kase == "1o") {
            K = cf::arcs::normalize_arc(g2, K, cf::arcs::norm_target::star).arc;
        } else {
            // The remaining cases need a unique sum point; for the third
            // cases its secant count must also keep (k-2)p < q-1.
            unsigned max_p = (o.kase == "2e") ? f.q() : (f.q() - 2) / static_cast<unsigned>(k - 2);
            if (max_p == 0)
                throw cf::hypothesis_violated("(k-2)p < q-1 cannot hold for this arc size");
            cf::arcs::arc_profile prof = cf::arcs::profile(g2, K);
            bool direct_ok = prof.beta == 1 && prof.p &&
                             (o.kase == "2e" || (k - 2) * *prof.p < static_cast<std::size_t>(f.q() - 1));
            if (!direct_ok) {
                auto found = cf::arcs::find_beta1(g2, K, o.seed, o.budget, max_p);
                if (!found)
                    throw cf::search_exhausted(
                        "no unique-sum-point position found within the budget");
                K = std::move(found->arc);
            }
            K = cf::arcs::normalize_arc(g2, K,
                                        o.kase == "2e" ? cf::arcs::norm_target::sinf_no_one
                                                       : cf::arcs::norm_target::parabola_clear)
                    .arc;
        }
    }

    cf::caps::build_result r;
    if (o.kase == "1e")
        r = cf::caps::build_even_case1(f, K, s);
    else if (o.kase == "2e")
        r = cf::caps::build_even_case2(f, K, s);
    else if (o.kase == "3e")
        r = cf::caps::build_even_case3(f, K, s);
    else if (o.kase == "1o")
        r = cf::caps::build_odd_case1(f, K, s);
    else
        r = cf::caps::build_odd_case3(f, K, s);

    cf::pg::geometry gout(f, o.dim);
    json j;
    j["case"] = o.kase;
    j["q"] = f.q();
    j["dim"] = o.dim;
    j["s"] = s;
    j["arc_size"] = k;
    j["size"] = r.C.pts.size();
    j["provenance"] = r.C.provenance;
    j["extension_points"] = r.extension_points.size();
    if (r.m1 != 0 || r.m2 != 0) {
        j["m1"] = r.m1;
        j["m2"] = r.m2;
    }
    j["elapsed_ms"] = ms_since(t0);
    if (!o.out.empty()) {
        std::ostringstream os;
        cf::io::write_cap(os, gout, r.C);
        write_text_file(o.out, os.str());
    }
    emit(j);
    return 0;
}

int run_cap_verify(const std::string& in, const std::string& level_name) {
    auto t0 = std::chrono::steady_clock::now();
    std::istringstream is(slurp(in));
    cf::io::cap_data d = cf::io::read_cap(is);
    plane_ctx ctx(d.q, d.N);
    if (ctx.f->modulus() != d.modulus)
        throw cf::parse_error("cap file modulus does not match the pinned modulus for q=" +
                              std::to_string(d.q));
    cf::caps::cap C;
    C.N = d.N;
    C.provenance = d.provenance;
    C.pts.reserve(d.pts.size());
    for (const auto& p : d.pts) C.pts.push_back(ctx.g->normalize(p));

    cf::caps::verify_level level = cf::caps::verify_level::automatic;
    if (level_name == "exhaustive")
        level = cf::caps::verify_level::exhaustive;
    else if (level_name == "sampled")
        level = cf::caps::verify_level::sampled;
    else if (level_name != "auto")
        throw cf::bad_parameters("unknown level '" + level_name + "' (expected auto, exhaustive or sampled)");

    cf::caps::cap_report cr = cf::caps::verify_cap(*ctx.g, C, level);
    json j;
    j["q"] = d.q;
    j["N"] = d.N;
    j["size"] = C.pts.size();
    j["provenance"] = d.provenance;
    j["is_cap"] = cr.ok;
    j["cap_check_exhaustive"] = (cr.level_used == cf::caps::verify_level::exhaustive);
    j["checked"] = cr.checked;
    if (cr.witness) {
        json w = json::array();
        for (const auto& p : *cr.witness) w.push_back(point_json(p));
        j["collinear_witness"] = w;
    }
    bool complete = false;
    if (cr.ok) {
        cf::caps::completeness_report co = cf::caps::verify_complete(*ctx.g, C, level);
        complete = co.complete;
        j["complete"] = co.complete;
        j["completeness_exhaustive"] = (co.level_used == cf::caps::verify_level::exhaustive);
        j["points_checked"] = co.points_checked;
        j["uncovered_count"] = co.uncovered_count;
    }
    j["elapsed_ms"] = ms_since(t0);
    emit(j);
    return (cr.ok && complete) ? 0 : 1;
}

int run_code_export(const std::string& in, const std::string& out) {
    std::istringstream is(slurp(in));
    cf::io::cap_data d = cf::io::read_cap(is);
    plane_ctx ctx(d.q, d.N);
    if (ctx.f->modulus() != d.modulus)
        throw cf::parse_error("cap file modulus does not match the pinned modulus for q=" +
                              std::to_string(d.q));
    cf::caps::cap C;
    C.N = d.N;
    C.provenance = d.provenance;
    for (const auto& p : d.pts) C.pts.push_back(ctx.g->normalize(p));
    cf::codes::linear_code_spec code = cf::codes::cap_to_code(*ctx.g, C);
    std::ostringstream os;
    cf::io::write_code(os, code);
    write_text_file(out, os.str());
    json j;
    j["q"] = code.q;
    j["n"] = code.n;
    j["r"] = code.r;
    j["k"] = code.n - code.r;
    j["out"] = out;
    emit(j);
    return 0;
}

int run_code_check(const std::string& in) {
    auto t0 = std::chrono::steady_clock::now();
    std::istringstream is(slurp(in));
    cf::codes::linear_code_spec code = cf::io::read_code(is);
    cf::gf::field_ctx f(h_from_q(code.q));
    bool d4 = cf::codes::min_distance_at_least_4(f, code);
    bool cr2 = cf::codes::covering_radius_is_2(f, code);
    json j;
    j["q"] = code.q;
    j["n"] = code.n;
    j["r"] = code.r;
    j["min_distance_at_least_4"] = d4;
    j["covering_radius_is_2"] = cr2;
    j["quasi_perfect"] = d4 && cr2;
    j["elapsed_ms"] = ms_since(t0);
    emit(j);
    return (d4 && cr2) ? 0 : 1;
}

struct bounds_opts {
    unsigned N = 0, q = 0;
    std::optional<unsigned> t2, t2a, t2s, t2splus, p;
};

int run_bounds(const bounds_opts& o) {
    cf::caps::bounds_inputs in;
    in.t2 = o.t2;
    in.t2a = o.t2a;
    in.t2s = o.t2s;
    in.t2splus = o.t2splus;
    in.p = o.p;
    cf::caps::bounds_table tab = cf::caps::bounds_report(o.N, o.q, in);
    json j;
    j["N"] = tab.N;
    j["q"] = tab.q;
    j["t2"] = tab.t2;
    j["t2a"] = tab.t2a;
    j["t2s"] = tab.t2s;
    j["t2splus"] = tab.t2splus;
    j["p"] = tab.p;
    j["rows"] = json::array();
    for (const auto& r : tab.rows) {
        json row;
        row["name"] = r.name;
        row["applicable"] = r.applicable;
        if (r.applicable)
            row["value"] = r.value;
        else
            row["value"] = nullptr;
        if (!r.condition.empty()) row["condition"] = r.condition;
        j["rows"].push_back(row);
    }
    emit(j);
    return 0;
}

int run_table1(unsigned q, std::uint64_t seed, unsigned iterations, unsigned budget) {
    auto t0 = std::chrono::steady_clock::now();
    if (q > 64) throw cf::bad_parameters("the end-to-end table row is limited to q <= 64");
    plane_ctx ctx(q);
    cf::arcs::plane_arc K = cf::arcs::greedy_complete(*ctx.g, cf::arcs::plane_arc{}, seed, iterations);
    const std::size_t k = K.size();
    cf::arcs::arc_profile prof = cf::arcs::profile(*ctx.g, K);
    unsigned max_p = (q - 2) / static_cast<unsigned>(k - 2);

    std::optional<unsigned> p_bar;
    if (prof.beta == 1 && prof.p && (k - 2) * *prof.p < static_cast<std::size_t>(q - 1)) {
        p_bar = *prof.p;
    } else if (max_p >= 1) {
        auto found = cf::arcs::find_beta1(*ctx.g, K, seed, budget, max_p);
        if (found) p_bar = *found->prof.p;
    }

    json j;
    j["q"] = q;
    j["t2_bar"] = k;
    j["seed"] = seed;
    if (p_bar) {
        j["t2_star_bar"] = k;
        j["p_bar"] = *p_bar;
        j["product"] = (k - 2) * *p_bar;
        j["q_minus_1"] = q - 1;
        j["holds"] = (k - 2) * *p_bar < static_cast<std::size_t>(q - 1);
    } else {
        j["t2_star_bar"] = nullptr;
        j["p_bar"] = nullptr;
        j["holds"] = false;
    }
    j["elapsed_ms"] = ms_since(t0);
    emit(j);
    return (p_bar && j["holds"].get<bool>()) ? 0 : 1;
}

int run_conjecture_scan(unsigned q, unsigned trials, std::uint64_t seed, unsigned budget) {
    auto t0 = std::chrono::steady_clock::now();
    plane_ctx ctx(q);
    cf::arcs::conjecture_report rep = cf::arcs::conjecture_scan(*ctx.g, trials, seed, budget);
    json j;
    j["q"] = q;
    j["trials"] = rep.trials;
    j["beta1_direct"] = rep.beta1_direct;
    j["beta1_found"] = rep.beta1_found;
    j["failures"] = rep.failures;
    j["elapsed_ms"] = ms_since(t0);
    emit(j);
    return 0;
}

int run_field_info(unsigned h, unsigned q) {
    if ((h == 0) == (q == 0)) throw cf::bad_parameters("provide exactly one of --h and --q");
    if (h == 0) h = h_from_q(q);
    cf::gf::field_ctx f(h);
    json j;
    j["h"] = f.h();
    j["q"] = f.q();
    j["modulus"] = cf::io::hex_string(f.modulus());
    j["primitive"] = 2;
    j["trace_one_primitive"] = f.find_primitive_with_trace_one();
    emit(j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complete caps in even-order projective spaces, and their codes"};
    app.require_subcommand(1);
    std::function<int()> action;

    // field-info
    {
        auto* c = app.add_subcommand("field-info", "field parameters for one binary field");
        c->set_help_flag("--help", "print help");  // frees the single-letter h for the option below
        auto h = std::make_shared<unsigned>(0);
        auto q = std::make_shared<unsigned>(0);
        c->add_option("--h", *h, "exponent of the field order 2^h");
        c->add_option("--q", *q, "field order (power of two)");
        c->callback([h, q, &action] { action = [h, q] { return run_field_info(*h, *q); }; });
    }

    // arc ...
    {
        auto* arc = app.add_subcommand("arc", "plane-arc constructions and analysis");
        arc->require_subcommand(1);

        auto add_family = [&](const std::string& name, const std::string& desc, bool searchy) {
            auto* c = arc->add_subcommand(name, desc);
            auto o = std::make_shared<arc_cmd_opts>();
            c->add_option("--q", o->q, "field order")->required();
            if (searchy) {
                c->add_option("--seed", o->seed, "random seed");
                c->add_option("--iterations", o->iterations, "restart passes");
            }
            if (name == "abatangelo")
                c->add_flag("--unchecked", o->unchecked, "skip the built-in property assertions");
            c->add_option("--out", o->out, "write the arc to this file");
            c->callback([name, o, &action] { action = [name, o] { return run_arc_family(name, *o); }; });
        };
        add_family("greedy", "random greedy completion", true);
        add_family("kw", "four-branch quartic arc (square q)", false);
        add_family("kwprime", "cube-root variant of the quartic arc", false);
        add_family("abatangelo", "cubic-coset arc with unique sum point", false);

        {
            auto* c = arc->add_subcommand("build", "build a named arc family");
            auto o = std::make_shared<arc_cmd_opts>();
            auto fam = std::make_shared<std::string>();
            c->add_option("--family", *fam, "greedy, kw, kwprime or abatangelo")->required();
            c->add_option("--q", o->q, "field order")->required();
            c->add_option("--seed", o->seed, "random seed (greedy)");
            c->add_option("--iterations", o->iterations, "restart passes (greedy)");
            c->add_flag("--unchecked", o->unchecked, "skip the built-in property assertions");
            c->add_option("--out", o->out, "write the arc to this file");
            c->callback([fam, o, &action] { action = [fam, o] { return run_arc_family(*fam, *o); }; });
        }
        {
            auto* c = arc->add_subcommand("profile", "full combinatorial profile of an arc file");
            auto in = std::make_shared<std::string>();
            c->add_option("--in", *in, "arc file")->required();
            c->callback([in, &action] { action = [in] { return run_arc_profile(*in); }; });
        }
        {
            auto* c = arc->add_subcommand("normalize", "move an arc into a canonical position");
            auto in = std::make_shared<std::string>();
            auto target = std::make_shared<std::string>();
            auto out = std::make_shared<std::string>();
            c->add_option("--in", *in, "arc file")->required();
            c->add_option("--target", *target,
                          "sumpoint-001, sumpoint-011, sinf-no-one, parabola-clear or star")
                ->required();
            c->add_option("--out", *out, "write the moved arc to this file");
            c->callback([in, target, out, &action] {
                action = [in, target, out] { return run_arc_normalize(*in, *target, *out); };
            });
        }
        {
            auto* c = arc->add_subcommand("verify", "validate the arc property of a file");
            auto in = std::make_shared<std::string>();
            c->add_option("--in", *in, "arc file")->required();
            c->callback([in, &action] { action = [in] { return run_arc_verify(*in); }; });
        }
    }

    // cap ...
    {
        auto* cap = app.add_subcommand("cap", "cap constructions and verification");
        cap->require_subcommand(1);
        {
            auto* c = cap->add_subcommand("build", "run one inductive construction");
            auto o = std::make_shared<cap_build_opts>();
            c->add_option("--case", o->kase, "1e, 2e, 3e, 1o or 3o")->required();
            c->add_option("--arc", o->arc_file, "plane-arc file already in the required position");
            c->add_option("--q", o->q, "field order (pipeline mode: search and normalize first)");
            c->add_option("--seed", o->seed, "random seed for the pipeline");
            c->add_option("--iterations", o->iterations, "greedy restart passes");
            c->add_option("--budget", o->budget, "projectivity-search budget");
            c->add_option("--dim", o->dim, "ambient projective dimension")->required();
            c->add_option("--out", o->out, "write the cap to this file");
            c->callback([o, &action] { action = [o] { return run_cap_build(*o); }; });
        }
        {
            auto* c = cap->add_subcommand("verify", "check the cap property and completeness");
            auto in = std::make_shared<std::string>();
            auto level = std::make_shared<std::string>("auto");
            c->add_option("--in", *in, "cap file")->required();
            c->add_option("--level", *level, "auto, exhaustive or sampled");
            c->callback([in, level, &action] {
                action = [in, level] { return run_cap_verify(*in, *level); };
            });
        }
    }

    // code ...
    {
        auto* code = app.add_subcommand("code", "parity-check matrix export and checks");
        code->require_subcommand(1);
        {
            auto* c = code->add_subcommand("export", "cap file -> parity-check column file");
            auto in = std::make_shared<std::string>();
            auto out = std::make_shared<std::string>();
            c->add_option("--in", *in, "cap file")->required();
            c->add_option("--out", *out, "code file to write")->required();
            c->callback([in, out, &action] { action = [in, out] { return run_code_export(*in, *out); }; });
        }
        {
            auto* c = code->add_subcommand("check", "minimum distance and covering radius");
            auto in = std::make_shared<std::string>();
            c->add_option("--in", *in, "code file")->required();
            c->callback([in, &action] { action = [in] { return run_code_check(*in); }; });
        }
    }

    // bounds
    {
        auto* c = app.add_subcommand("bounds", "size-bound table for complete caps");
        auto o = std::make_shared<bounds_opts>();
        c->add_option("--N", o->N, "projective dimension")->required();
        c->add_option("--q", o->q, "field order")->required();
        auto opt = [&](const char* name, std::optional<unsigned>& slot, const char* desc) {
            c->add_option_function<unsigned>(name, [&slot](unsigned v) { slot = v; }, desc);
        };
        opt("--t2", o->t2, "smallest known complete plane arc");
        opt("--t2a", o->t2a, "smallest known affinely complete plane arc");
        opt("--t2s", o->t2s, "smallest known unique-sum-point arc");
        opt("--t2splus", o->t2splus, "smallest known unique-sum-point arc with few secants");
        opt("--p", o->p, "secant count through the sum point");
        c->callback([o, &action] { action = [o] { return run_bounds(*o); }; });
    }

    // table1
    {
        auto* c = app.add_subcommand("table1", "end-to-end plane parameters for one q");
        auto q = std::make_shared<unsigned>(0);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto iterations = std::make_shared<unsigned>(40);
        auto budget = std::make_shared<unsigned>(4000);
        c->add_option("--q", *q, "field order (<= 64)")->required();
        c->add_option("--seed", *seed, "random seed");
        c->add_option("--iterations", *iterations, "greedy restart passes");
        c->add_option("--budget", *budget, "projectivity-search budget");
        c->callback([q, seed, iterations, budget, &action] {
            action = [q, seed, iterations, budget] {
                return run_table1(*q, *seed, *iterations, *budget);
            };
        });
    }

    // conjecture-scan
    {
        auto* c = app.add_subcommand("conjecture-scan",
                                     "how often random complete arcs admit a unique-sum-point position");
        auto q = std::make_shared<unsigned>(0);
        auto trials = std::make_shared<unsigned>(10);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto budget = std::make_shared<unsigned>(2000);
        c->add_option("--q", *q, "field order (<= 16)")->required();
        c->add_option("--trials", *trials, "number of random arcs");
        c->add_option("--seed", *seed, "random seed");
        c->add_option("--budget", *budget, "projectivity-search budget per arc");
        c->callback([q, trials, seed, budget, &action] {
            action = [q, trials, seed, budget] {
                return run_conjecture_scan(*q, *trials, *seed, *budget);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const cf::bad_parameters& e) {
        std::cerr << "capforge: bad parameters: " << e.what() << '\n';
    } catch (const cf::hypothesis_violated& e) {
        std::cerr << "capforge: hypothesis violated: " << e.what() << '\n';
    } catch (const cf::precondition_violated& e) {
        std::cerr << "capforge: precondition violated: " << e.what() << '\n';
    } catch (const cf::parse_error& e) {
        std::cerr << "capforge: parse error: " << e.what() << '\n';
    } catch (const cf::too_small& e) {
        std::cerr << "capforge: " << e.what() << '\n';
    } catch (const cf::too_large& e) {
        std::cerr << "capforge: " << e.what() << '\n';
    } catch (const cf::no_valid_w& e) {
        std::cerr << "capforge: no valid parameter: " << e.what() << '\n';
    } catch (const cf::not_found& e) {
        std::cerr << "capforge: not found: " << e.what() << '\n';
    } catch (const cf::duplicate_point& e) {
        std::cerr << "capforge: duplicate point: " << e.what() << '\n';
    } catch (const cf::zero_vector& e) {
        std::cerr << "capforge: zero vector: " << e.what() << '\n';
    } catch (const cf::division_by_zero& e) {
        std::cerr << "capforge: division by zero: " << e.what() << '\n';
    } catch (const cf::not_an_arc& e) {
        std::cerr << "capforge: not an arc: " << e.what() << '\n';
        return 1;
    } catch (const cf::integrality_violated& e) {
        std::cerr << "capforge: integrality violated: " << e.what() << '\n';
        return 1;
    } catch (const cf::search_exhausted& e) {
        std::cerr << "capforge: search exhausted: " << e.what() << '\n';
        return 1;
    } catch (const cf::error& e) {
        std::cerr << "capforge: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "capforge: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
