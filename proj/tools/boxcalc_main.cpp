// boxcalc: exact box-spline calculus on lattices.
//
// Subcommands: describe, eval-box, eval-w, dm-basis, toric-vertices,
// verify {theorem1|dm-corollary|twisted-corollary|theorem2-1d}, grid.
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage or input errors.

#include "boxcalc/bernoulli.hpp"
#include "boxcalc/boxspline.hpp"
#include "boxcalc/dm_space.hpp"
#include "boxcalc/identity.hpp"
#include "boxcalc/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace boxcalc;

constexpr std::uint64_t kDefaultSeed = 20250809;

Configuration load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("config '" + path + "': " + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("X"))
        throw ParseError("config '" + path + "': expected {\"dim\": n, \"X\": [[...], ...]}");
    if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
        throw ParseError("config '" + path + "': field 'dim' must be a positive integer");
    std::size_t n = j["dim"].get<std::size_t>();
    if (!j["X"].is_array()) throw ParseError("config '" + path + "': field 'X' must be an array");
    std::vector<IntVec> X;
    std::size_t row = 0;
    for (const auto& vec : j["X"]) {
        if (!vec.is_array() || vec.size() != n)
            throw ParseError("config '" + path + "': X[" + std::to_string(row) +
                             "] must be an array of " + std::to_string(n) + " integers");
        IntVec a;
        for (const auto& x : vec) {
            if (!x.is_number_integer())
                throw ParseError("config '" + path + "': X[" + std::to_string(row) +
                                 "] has a non-integer entry");
            a.push_back(Int(x.get<long>()));
        }
        X.push_back(std::move(a));
        ++row;
    }
    return Configuration(n, std::move(X));
}

RatVec parse_rat_vec(const std::string& s, std::size_t dim, const char* what) {
    RatVec v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rat(item));
    if (v.size() != dim)
        throw ParseError(std::string(what) + ": expected " + std::to_string(dim) +
                         " comma-separated rationals, got '" + s + "'");
    return v;
}

std::vector<std::size_t> parse_indices(const std::string& s, std::size_t count) {
    std::vector<std::size_t> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long idx = std::stol(item);
        if (idx < 0 || (std::size_t)idx >= count)
            throw ParseError("index " + item + " out of range");
        out.push_back((std::size_t)idx);
    }
    return out;
}

const AdmissibleSubspace& subspace_for_indices(const ArrangementIndex& arr,
                                               const std::vector<std::size_t>& idx) {
    std::vector<IntVec> span;
    for (std::size_t i : idx) span.push_back(arr.config().X[i]);
    RatMat m(span.size(), arr.dim());
    for (std::size_t i = 0; i < span.size(); ++i)
        for (std::size_t j = 0; j < arr.dim(); ++j) m(i, j) = Rat(span[i][j]);
    RrefResult rr = rref(m);
    std::vector<Rat> key;
    key.push_back(Rat(Int(rr.rank)));
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < arr.dim(); ++j) key.push_back(rr.reduced(i, j));
    for (const AdmissibleSubspace& s : arr.subspaces())
        if (s.span_key == key) return s;
    throw NonAdmissibleSubspace("the given indices span a non-admissible subspace");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open output file '" + out_path + "'");
        out << text;
    }
}

int cmd_describe(const std::string& config_path, bool as_json) {
    ArrangementIndex arr{load_config(config_path)};
    const Configuration& c = arr.config();
    DMBasis dmb = dm_basis(arr);
    if (as_json) {
        nlohmann::ordered_json j;
        j["dim"] = c.n;
        j["N"] = c.size();
        nlohmann::ordered_json hps = nlohmann::ordered_json::array();
        for (const Hyperplane& h : arr.hyperplanes()) {
            nlohmann::ordered_json hj;
            nlohmann::ordered_json normal = nlohmann::ordered_json::array();
            for (const Int& x : h.normal) normal.push_back(x.str());
            hj["normal"] = normal;
            hj["on_hyperplane"] = h.on_hyperplane;
            hps.push_back(std::move(hj));
        }
        j["hyperplanes"] = std::move(hps);
        j["cocircuits"] = arr.cocircuits();
        j["num_subspaces"] = arr.subspaces().size();
        j["zonotope_volume"] = rat_to_string(arr.zonotope_volume());
        j["num_bases"] = arr.bases().size();
        j["dm_dimension"] = dmb.basis.size();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "configuration: n=" << c.n << ", N=" << c.size() << "\n";
    std::cout << "X:";
    for (const IntVec& a : c.X) std::cout << " " << vec_to_string(a);
    std::cout << "\n";
    std::cout << "admissible hyperplanes: " << arr.hyperplanes().size() << "\n";
    for (std::size_t i = 0; i < arr.hyperplanes().size(); ++i) {
        const Hyperplane& h = arr.hyperplanes()[i];
        std::cout << "  normal " << vec_to_string(h.normal) << ", cocircuit {";
        const auto& co = arr.cocircuits()[i];
        for (std::size_t k = 0; k < co.size(); ++k) std::cout << (k ? "," : "") << co[k];
        std::cout << "}\n";
    }
    std::cout << "admissible subspaces: |R| = " << arr.subspaces().size()
              << ", |R'| = " << arr.proper_subspaces().size() << "\n";
    std::cout << "zonotope volume: " << rat_to_string(arr.zonotope_volume()) << "\n";
    std::cout << "bases: " << arr.bases().size() << "\n";
    std::cout << "dim D(X): " << dmb.basis.size() << "\n";
    return 0;
}

int cmd_eval_box(const std::string& config_path, const std::string& point,
                 const std::string& list) {
    auto arr = std::make_shared<ArrangementIndex>(load_config(config_path));
    RatVec v = parse_rat_vec(point, arr->dim(), "--point");
    std::vector<std::size_t> Y = parse_indices(list, arr->config().size());
    if (Y.empty())
        for (std::size_t i = 0; i < arr->config().size(); ++i) Y.push_back(i);
    BoxEvaluator box(arr);
    std::cout << rat_to_string(box.box_eval(Y, v)) << "\n";
    return 0;
}

int cmd_eval_w(const std::string& config_path, const std::string& point,
               const std::string& s_indices, bool closed_form) {
    ArrangementIndex arr{load_config(config_path)};
    BernoulliExpr expr;
    if (s_indices.empty()) {
        expr = w_series(arr.config());
    } else {
        expr = w_quotient(arr, subspace_for_indices(arr, parse_indices(s_indices,
                                                                       arr.config().size())));
    }
    if (closed_form) std::cout << expr.to_string() << "\n";
    if (!point.empty()) {
        RatVec v = parse_rat_vec(point, arr.dim(), "--point");
        std::cout << rat_to_string(w_eval(expr, v)) << "\n";
    }
    return 0;
}

int cmd_dm_basis(const std::string& config_path) {
    ArrangementIndex arr{load_config(config_path)};
    for (const Poly& p : dm_basis(arr).basis) std::cout << p.to_string() << "\n";
    return 0;
}

int cmd_toric_vertices(const std::string& config_path) {
    ArrangementIndex arr{load_config(config_path)};
    for (const CharacterG& g : toric_vertices(arr)) std::cout << g.to_string() << "\n";
    return 0;
}

int cmd_verify(const std::string& kind, const std::string& config_path, const std::string& poly,
               std::size_t npoints, std::uint64_t seed, const std::string& g_str,
               const std::string& out_path) {
    IdentityVerifier ver{load_config(config_path)};
    const std::size_t n = ver.arrangement().dim();
    auto points = sample_regular_points(ver.arrangement(), npoints, seed);
    VerificationReport rep;
    if (kind == "theorem1") {
        rep = ver.theorem1_check(Poly::parse(poly.empty() ? "1" : poly, n), points);
    } else if (kind == "dm-corollary") {
        rep = ver.dm_corollary_check(points);
    } else if (kind == "twisted-corollary" || kind == "theorem2-1d") {
        if (g_str.empty()) throw ParseError("--g is required for twisted checks");
        CharacterG g = CharacterG::from(parse_rat_vec(g_str, n, "--g"));
        if (kind == "theorem2-1d") {
            rep = ver.theorem2_check_1d(g, Poly::parse(poly.empty() ? "1" : poly, n), points);
        } else if (!poly.empty()) {
            rep = ver.twisted_corollary_check(g, Poly::parse(poly, n), points);
        } else {
            // default: every element of D(X(g))
            std::vector<std::size_t> xg = x_of_g(ver.arrangement().config(), g);
            std::vector<IntVec> xgv;
            for (std::size_t i : xg) xgv.push_back(ver.arrangement().config().X[i]);
            ArrangementIndex sub{Configuration(n, xgv)};
            bool first = true;
            for (const Poly& p : dm_basis(sub).basis) {
                VerificationReport r = ver.twisted_corollary_check(g, p, points);
                if (first) {
                    rep = std::move(r);
                    first = false;
                } else {
                    for (PointResult& pr : r.points) {
                        pr.f = r.f;
                        rep.all_pass = rep.all_pass && pr.pass;
                        rep.points.push_back(std::move(pr));
                    }
                }
            }
            rep.f = "";
        }
    } else {
        throw ParseError("unknown verify kind '" + kind + "'");
    }
    rep.seed = seed;
    emit(report_to_json(rep), out_path);
    return rep.all_pass ? 0 : 1;
}

int cmd_grid(const std::string& config_path, const std::string& function, const std::string& min_s,
             const std::string& max_s, const std::string& step_s, const std::string& poly,
             const std::string& s_indices, bool exact, const std::string& out_path) {
    auto arr = std::make_shared<ArrangementIndex>(load_config(config_path));
    const std::size_t n = arr->dim();
    RatVec lo = parse_rat_vec(min_s, n, "--min");
    RatVec hi = parse_rat_vec(max_s, n, "--max");
    Rat step = parse_rat(step_s);
    if (step <= 0) throw ParseError("--step must be positive");

    std::optional<IdentityVerifier> ver;
    std::optional<BoxEvaluator> box;
    BernoulliExpr expr;
    Poly f = Poly::constant(n, 0);
    Poly cont = f;
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < arr->config().size(); ++i) all.push_back(i);

    if (function == "box") {
        box.emplace(arr);
    } else if (function == "w") {
        expr = w_series(arr->config());
    } else if (function == "w-quotient") {
        expr = w_quotient(*arr, subspace_for_indices(*arr, parse_indices(s_indices,
                                                                         arr->config().size())));
    } else if (function == "semidiscrete" || function == "theorem1-diff") {
        if (poly.empty()) throw ParseError("--poly is required for " + function);
        f = Poly::parse(poly, n);
        ver.emplace(arr->config());
        cont = ver->continuous_conv_poly(f);
    } else {
        throw ParseError("unknown grid function '" + function + "'");
    }

    std::ostringstream csv;
    for (std::size_t i = 0; i < n; ++i) csv << "v" << (i + 1) << ",";
    csv << "value";
    if (exact) csv << ",exact";
    csv << "\n";

    std::size_t skipped = 0;
    RatVec v = lo;
    for (;;) {
        bool regular = arr->is_regular(v);
        if (!regular) {
            ++skipped;
        } else {
            Rat value;
            if (function == "box") {
                value = box->box_eval(all, v);
            } else if (function == "w" || function == "w-quotient") {
                value = w_eval(expr, v);
            } else if (function == "semidiscrete") {
                value = ver->semidiscrete_eval(f, v);
            } else {
                value = ver->semidiscrete_eval(f, v) - cont.eval(v);
            }
            for (std::size_t i = 0; i < n; ++i) csv << rat_to_decimal(v[i]) << ",";
            csv << rat_to_decimal(value);
            if (exact) csv << "," << rat_to_string(value);
            csv << "\n";
        }
        std::size_t axis = 0;
        while (axis < n) {
            v[axis] += step;
            if (v[axis] <= hi[axis]) break;
            v[axis] = lo[axis];
            ++axis;
        }
        if (axis == n) break;
    }
    csv << "# skipped_nonregular: " << skipped << "\n";
    emit(csv.str(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact box-spline calculus on lattices"};
    app.require_subcommand(1);

    std::string config_path, point, list, s_indices, poly, g_str, out_path;
    std::string function, min_s, max_s, step_s;
    bool as_json = false, closed_form = false, exact = false;
    std::size_t npoints = 20;
    std::uint64_t seed = kDefaultSeed;

    auto* describe = app.add_subcommand("describe", "print the combinatorics of a configuration");
    describe->add_option("--config", config_path, "configuration JSON file")->required();
    describe->add_flag("--json", as_json, "emit JSON instead of text");

    auto* eval_box = app.add_subcommand("eval-box", "evaluate the box-spline density");
    eval_box->add_option("--config", config_path)->required();
    eval_box->add_option("--point", point, "comma-separated rationals")->required();
    eval_box->add_option("--list", list, "X indices of the sublist (default: all)");

    auto* eval_w = app.add_subcommand("eval-w", "evaluate or print W(X) or W(X/s)");
    eval_w->add_option("--config", config_path)->required();
    eval_w->add_option("--point", point, "evaluation point");
    eval_w->add_option("--s-indices", s_indices, "X indices spanning s (for W(X/s))");
    eval_w->add_flag("--closed-form", closed_form, "print the closed form");

    auto* dm = app.add_subcommand("dm-basis", "print the Dahmen-Micchelli basis");
    dm->add_option("--config", config_path)->required();

    auto* tv = app.add_subcommand("toric-vertices", "list the toric vertices of the arrangement");
    tv->add_option("--config", config_path)->required();

    auto* verify = app.add_subcommand("verify", "verify an identity at sampled regular points");
    std::string kind;
    verify->add_option("kind", kind, "theorem1 | dm-corollary | twisted-corollary | theorem2-1d")
        ->required();
    verify->add_option("--config", config_path)->required();
    verify->add_option("--poly", poly, "polynomial in v1..vn");
    verify->add_option("--points", npoints, "number of sampled points");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--g", g_str, "character, comma-separated rationals");
    verify->add_option("--out", out_path, "write the JSON report here instead of stdout");

    auto* grid = app.add_subcommand("grid", "export function values on a rectangular grid (CSV)");
    grid->add_option("--config", config_path)->required();
    grid->add_option("--function", function, "box | w | w-quotient | semidiscrete | theorem1-diff")
        ->required();
    grid->add_option("--min", min_s, "lower corner")->required();
    grid->add_option("--max", max_s, "upper corner")->required();
    grid->add_option("--step", step_s, "grid step (rational)")->required();
    grid->add_option("--poly", poly, "polynomial for semidiscrete / theorem1-diff");
    grid->add_option("--s-indices", s_indices, "X indices spanning s for w-quotient");
    grid->add_flag("--exact", exact, "append an exact p/q column");
    grid->add_option("--out", out_path, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*describe) return cmd_describe(config_path, as_json);
        if (*eval_box) return cmd_eval_box(config_path, point, list);
        if (*eval_w) return cmd_eval_w(config_path, point, s_indices, closed_form);
        if (*dm) return cmd_dm_basis(config_path);
        if (*tv) return cmd_toric_vertices(config_path);
        if (*verify) return cmd_verify(kind, config_path, poly, npoints, seed, g_str, out_path);
        if (*grid)
            return cmd_grid(config_path, function, min_s, max_s, step_s, poly, s_indices, exact,
                            out_path);
    } catch (const boxcalc::BoxcalcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
