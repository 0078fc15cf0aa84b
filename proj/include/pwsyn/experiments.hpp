#pragma once

// Batch experiments behind the command-line driver. Each cmd_* takes a JSON
// config and returns a JSON report; reports embed every set a certificate
// refers to, so cmd_verify can re-check them from the report alone.
//
// Certificates are listed under "certificates" as {"kind": ..., ...}, with
// JSON pointers ("/set", "/grid", ...) naming the report fields they concern.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "pwsyn/errors.hpp"
#include "pwsyn/families.hpp"
#include "pwsyn/generators.hpp"
#include "pwsyn/induced.hpp"
#include "pwsyn/returnsets.hpp"
#include "pwsyn/serialize.hpp"
#include "pwsyn/spade.hpp"
#include "pwsyn/systems.hpp"

namespace pwsyn {

inline constexpr std::uint64_t default_seed = 20240607;

struct RunContext {
    std::uint64_t seed = default_seed;
    bool oracle = false;
    std::filesystem::path base_dir = ".";
};

namespace detail {

template <class T>
T opt(const json& j, const char* key, T fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

inline const json& params_of(const json& cfg) {
    static const json empty = json::object();
    return cfg.contains("params") ? cfg.at("params") : empty;
}

inline std::int64_t param(const json& cfg, const char* key, std::int64_t fallback) { return opt<std::int64_t>(params_of(cfg), key, fallback); }

inline void require_if_asked(const json& cfg, const std::string& name, bool present) {
    if (present || !cfg.contains("require")) return;
    for (const auto& r : cfg.at("require"))
        if (r.get<std::string>() == name) throw Infeasible("mandatory certificate '" + name + "' not found");
}

inline json cert_entry(const std::string& kind, const std::string& on, json data) {
    return json{{"kind", kind}, {"on", on}, {"data", std::move(data)}};
}

inline json report_header(const std::string& name, const json& cfg, const RunContext& ctx) {
    return json{{"experiment", name}, {"seed", ctx.seed}, {"precision_bits", real_mantissa_bits}, {"config", cfg}};
}

} // namespace detail

/// Set sources: {"kind": "sturmian", "alpha", "lo", "hi"}, {"kind": "congruence",
/// "modulus", "residue", "lo", "hi"}, {"kind": "random", "lo", "hi", "density",
/// "max_gap", "blocks", "block_length"}, {"kind": "literal", "lo", "hi",
/// "members"}, {"kind": "file", "path", "format": "json" | "bitmap"}.
inline WindowSet load_set(const json& spec, const RunContext& ctx) {
    using detail::get_as;
    const auto kind = get_as<std::string>(spec, "kind");
    if (kind == "literal") return window_set_from_json(spec);
    const auto window = [&] { return std::make_pair(get_as<std::int64_t>(spec, "lo"), get_as<std::int64_t>(spec, "hi")); };
    if (kind == "sturmian") {
        const auto [lo, hi] = window();
        return sturmian(parse_angle(get_as<std::string>(spec, "alpha")), lo, hi);
    }
    if (kind == "congruence") {
        const auto [lo, hi] = window();
        return congruence_class(get_as<std::int64_t>(spec, "modulus"), detail::opt<std::int64_t>(spec, "residue", 0), lo, hi);
    }
    if (kind == "random") {
        const auto [lo, hi] = window();
        RandomPwsParams p;
        p.density = detail::opt<double>(spec, "density", p.density);
        p.max_gap = detail::opt<std::int64_t>(spec, "max_gap", p.max_gap);
        p.blocks = detail::opt<std::int64_t>(spec, "blocks", p.blocks);
        p.block_length = detail::opt<std::int64_t>(spec, "block_length", p.block_length);
        return random_thick_syndetic(lo, hi, ctx.seed, p);
    }
    if (kind == "file") {
        std::filesystem::path path = get_as<std::string>(spec, "path");
        if (path.is_relative()) path = ctx.base_dir / path;
        const auto format = detail::opt<std::string>(spec, "format", "json");
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot open set file " + path.string());
        if (format == "bitmap") return read_bitmap(in);
        if (format != "json") throw ParseError("unknown set file format '" + format + "'");
        json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("set file: ") + e.what());
        }
        return window_set_from_json(j);
    }
    throw ParseError("unknown set kind '" + kind + "'");
}

// ---- analyze ---------------------------------------------------------------

/// max_gap / syndeticity / longest run / pws witness / progression search on one set.
inline json cmd_analyze(const json& cfg, const RunContext& ctx) {
    const WindowSet s = load_set(detail::field(cfg, "set"), ctx);
    if (s.empty()) throw EmptySet("analyzed set has no members");
    const auto b_max = detail::param(cfg, "b_max", 20), L = detail::param(cfg, "L", 50), k = detail::param(cfg, "k", 3);

    json r = detail::report_header("analyze", cfg, ctx);
    r["set"] = to_json(s);
    r["count"] = s.count();
    const GapReport gap = max_gap(s);
    r["max_gap"] = to_json(gap);
    json certs = json::array();

    const auto N = detail::param(cfg, "N", gap.max_gap);
    const auto syn = syndetic_certificate(s, N);
    if (const auto* c = std::get_if<SyndeticCert>(&syn)) {
        r["syndetic"] = json{{"certificate", to_json(*c)}};
        certs.push_back(detail::cert_entry("syndetic", "/set", to_json(*c)));
    } else {
        r["syndetic"] = json{{"refutation", to_json(std::get<SyndeticRefutation>(syn))}};
    }
    detail::require_if_asked(cfg, "syndetic", std::holds_alternative<SyndeticCert>(syn));

    const ThickCert run = longest_run(s);
    r["longest_run"] = to_json(run);
    certs.push_back(detail::cert_entry("thick", "/set", to_json(run)));

    const auto pws = pws_witness(s, b_max, L);
    r["pws"] = pws ? to_json(*pws) : json(nullptr);
    if (pws) certs.push_back(detail::cert_entry("pws", "/set", to_json(*pws)));
    detail::require_if_asked(cfg, "pws", pws.has_value());

    const auto ap = find_ap(s, k);
    r["ap"] = ap ? to_json(*ap) : json(nullptr);
    if (ap) {
        auto e = detail::cert_entry("ap", "/set", to_json(*ap));
        e["k"] = k;
        certs.push_back(std::move(e));
    }
    detail::require_if_asked(cfg, "ap", ap.has_value());

    r["certificates"] = std::move(certs);
    return r;
}

// ---- thma / thmb pipelines ------------------------------------------------

/// combinatorial set {(m, n) : m + p_i(n) in S} on a box, certified by a 2D
/// pws witness inside the validity mask.
inline json cmd_thma(const json& cfg, const RunContext& ctx) {
    const WindowSet s = load_set(detail::field(cfg, "set"), ctx);
    const PolyFamily family = family_from_json(detail::field(cfg, "family"));
    require_vanishing(family);
    const Box box = box_from_json(detail::field(cfg, "box"));
    const auto b1 = detail::param(cfg, "b1_max", 20), b2 = detail::param(cfg, "b2_max", 20);
    const auto w = detail::param(cfg, "w", 20), h = detail::param(cfg, "h", 20);

    const CombinatorialSet cs = combinatorial_set_2d(s, family, box);
    json r = detail::report_header("thma", cfg, ctx);
    r["set"] = to_json(s);
    r["family"] = to_json(family);
    r["grid"] = to_json(cs.members);
    r["validity"] = to_json(cs.validity);
    r["grid_count"] = cs.members.count();
    r["validity_count"] = cs.validity.count();

    const auto cert = pws_witness_2d(cs.members, b1, b2, w, h, &cs.validity);
    json certs = json::array();
    certs.push_back(json{{"kind", "combinatorial"}, {"set", "/set"}, {"family", "/family"}, {"members", "/grid"}, {"validity", "/validity"}});
    if (cert) {
        r["pws2d"] = to_json(*cert);
        r["achieved"] = json{{"b1", cert->b1}, {"b2", cert->b2}, {"w", cert->w}, {"h", cert->h}, {"area", cert->w * cert->h}};
        auto e = detail::cert_entry("pws2d", "/grid", to_json(*cert));
        e["validity"] = "/validity";
        certs.push_back(std::move(e));
    } else {
        r["pws2d"] = nullptr;
    }
    detail::require_if_asked(cfg, "pws2d", cert.has_value());
    r["certificates"] = std::move(certs);
    return r;
}

/// Target A = the best pws slice of the combinatorial set; for each N find a_N
/// with A ∩ [-N, N] ⊆ {n : a_N + p_i(n) in S}.
inline json cmd_thmb(const json& cfg, const RunContext& ctx) {
    const WindowSet s = load_set(detail::field(cfg, "set"), ctx);
    const PolyFamily family = family_from_json(detail::field(cfg, "family"));
    require_vanishing(family);
    const auto Ns = detail::opt<std::vector<std::int64_t>>(cfg, "N", {5, 10, 15, 20});
    if (Ns.empty()) throw BadBound("N list is empty");

    json r = detail::report_header("thmb", cfg, ctx);
    r["set"] = to_json(s);
    r["family"] = to_json(family);

    WindowSet target;
    if (cfg.contains("target")) {
        target = load_set(cfg.at("target"), ctx);
    } else {
        const Box box = box_from_json(detail::field(cfg, "box"));
        const CombinatorialSet cs = combinatorial_set_2d(s, family, box);
        const SliceChoice sc = best_slice(cs.members, detail::param(cfg, "slice_b_max", 20), detail::param(cfg, "slice_L", 10));
        r["slice"] = json{{"m", sc.m}, {"pws", to_json(sc.cert)}};
        target = slice(cs.members, sc.m);
    }
    r["target"] = to_json(target);

    json results = json::array(), certs = json::array();
    std::optional<std::int64_t> a_max;
    bool all_found = true;
    const auto N_max = *std::max_element(Ns.begin(), Ns.end());
    for (auto N : Ns) {
        std::optional<std::int64_t> a;
        try {
            a = shift_cover_search(s, family, target, N);
        } catch (const EmptySet&) {
            a = std::nullopt;
        }
        results.push_back(json{{"N", N}, {"a", a ? json(*a) : json(nullptr)}});
        if (a) {
            certs.push_back(json{{"kind", "shift_cover"}, {"set", "/set"}, {"family", "/family"}, {"target", "/target"}, {"N", N}, {"a", *a}});
            if (N == N_max) a_max = a;
        }
        all_found = all_found && a.has_value();
    }
    r["covers"] = std::move(results);
    r["all_found"] = all_found;

    // The targets A ∩ [-N, N] are nested, so a cover for the largest N covers all.
    if (a_max) {
        bool uniform = true;
        for (auto N : Ns)
            for (std::int64_t n = -N; n <= N && uniform; ++n)
                if (target.contains(n))
                    for (const auto& p : family) uniform = uniform && s.contains(to_i64(p.eval(n) + *a_max));
        r["uniform_a"] = json{{"a", *a_max}, {"works_for_all_N", uniform}};
    } else {
        r["uniform_a"] = nullptr;
    }
    detail::require_if_asked(cfg, "shift_cover", all_found);
    r["certificates"] = std::move(certs);
    return r;
}

// ---- return sets -----------------------------------------------------------

namespace detail {
inline void load_dynamics(const json& cfg, SystemSpec& sys, Point& x, Point& center) {
    sys = system_from_json(field(cfg, "system"));
    x = cfg.contains("point") ? point_from_json(sys, cfg.at("point")) : base_point(sys);
    center = cfg.contains("center") ? point_from_json(sys, cfg.at("center")) : x;
}
} // namespace detail

inline json cmd_returns(const json& cfg, const RunContext& ctx) {
    ReturnQuery q;
    detail::load_dynamics(cfg, q.sys, q.x, q.center);
    q.family = family_from_json(detail::field(cfg, "family"));
    q.eps = detail::get_as<double>(cfg, "epsilon");

    json r = detail::report_header("returns", cfg, ctx);
    r["system"] = to_json(q.sys);
    r["family"] = to_json(q.family);
    json certs = json::array();

    if (cfg.contains("box")) {
        q.box = box_from_json(cfg.at("box"));
        const GridSet e = return_set_2d(q);
        r["grid"] = to_json(e);
        r["count"] = e.count();
        const auto cert = pws_witness_2d(e, detail::param(cfg, "b1_max", 20), detail::param(cfg, "b2_max", 20), detail::param(cfg, "w", 20),
                                         detail::param(cfg, "h", 20));
        r["pws2d"] = cert ? to_json(*cert) : json(nullptr);
        if (cert) certs.push_back(detail::cert_entry("pws2d", "/grid", to_json(*cert)));
        detail::require_if_asked(cfg, "pws2d", cert.has_value());
        if (ctx.oracle) r["oracle"] = json{{"applicable", false}, {"reason", "the modular oracle is one-dimensional"}};
        r["certificates"] = std::move(certs);
        return r;
    }

    const auto& win = detail::field(cfg, "window");
    q.lo = detail::get_as<std::int64_t>(win, "lo");
    q.hi = detail::get_as<std::int64_t>(win, "hi");
    const WindowSet s = return_set_1d(q);
    r["set"] = to_json(s);
    r["count"] = s.count();
    if (!s.empty()) {
        const GapReport gap = max_gap(s);
        r["max_gap"] = to_json(gap);
        const auto syn = syndetic_certificate(s, gap.max_gap);
        if (const auto* c = std::get_if<SyndeticCert>(&syn)) certs.push_back(detail::cert_entry("syndetic", "/set", to_json(*c)));
    } else {
        r["max_gap"] = nullptr;
    }
    const auto pws = s.empty() ? std::nullopt : pws_witness(s, detail::param(cfg, "b_max", 20), detail::param(cfg, "L", 50));
    r["pws"] = pws ? to_json(*pws) : json(nullptr);
    if (pws) certs.push_back(detail::cert_entry("pws", "/set", to_json(*pws)));
    detail::require_if_asked(cfg, "pws", pws.has_value());

    if (ctx.oracle) {
        if (const auto mr = as_modular_rotation(q.sys, q.x, q.center)) {
            const WindowSet o = modular_rotation_oracle(*mr, q.family, q.eps, q.lo, q.hi);
            json mismatches = json::array();
            for (std::int64_t n = q.lo; n <= q.hi && mismatches.size() < 10; ++n)
                if (o.contains(n) != s.contains(n)) mismatches.push_back(n);
            r["oracle"] = json{{"applicable", true}, {"match", o == s}, {"mismatches", std::move(mismatches)}};
            if (!(o == s)) throw Mismatch("return set differs from the modular oracle");
        } else {
            r["oracle"] = json{{"applicable", false}, {"reason", "needs a one-dimensional rotation with rational angle and points"}};
        }
    }
    r["certificates"] = std::move(certs);
    return r;
}

// ---- induced systems -------------------------------------------------------

inline json cmd_induced(const json& cfg, const RunContext& ctx) {
    SystemSpec sys;
    Point x, center;
    detail::load_dynamics(cfg, sys, x, center);
    PolyFamily family = family_from_json(detail::field(cfg, "family"));
    const auto K = detail::param(cfg, "K", 3), N = detail::param(cfg, "N", 1000);
    const double eps = detail::get_as<double>(cfg, "epsilon");

    json r = detail::report_header("induced", cfg, ctx);
    r["input_family"] = to_json(family);
    const auto check = check_spade(family);
    if (const auto* v = std::get_if<SpadeViolation>(&check)) {
        const SpadeReduction red = reduce_to_spade(family);
        json cover = json::array();
        for (const auto& c : red.covering) cover.push_back(json{{"removed", c.removed}, {"kept", c.kept}, {"shift", detail::big_to_json(c.shift)}});
        r["reduction"] = json{{"violation", json{{"i", v->i}, {"j", v->j}, {"t", detail::big_to_json(v->t)}}},
                              {"core_indices", red.core_indices},
                              {"covering", std::move(cover)}};
        family = red.core;
        if (!satisfies_spade(family)) throw NotSpade("reduced family still violates the normal form");
    }
    r["family"] = to_json(family);

    const XiBlock base = xi_block(sys, x, family, K);
    r["block"] = to_json(base);
    const WindowSet times = recurrence_times(sys, x, family, K, eps, N);
    r["recurrence_times"] = to_json(times);
    r["count"] = times.count();

    std::vector<std::int64_t> nonzero;
    for (auto n : times.members())
        if (n != 0) nonzero.push_back(n);
    std::sort(nonzero.begin(), nonzero.end(), [](auto a, auto b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a > b; });
    r["nearest_nonzero"] = nonzero.empty() ? json(nullptr) : json(nonzero.front());

    json certs = json::array();
    certs.push_back(json{{"kind", "block"}, {"on", "/block"}});
    const auto shown = std::min<std::size_t>(nonzero.size(), static_cast<std::size_t>(detail::param(cfg, "certify", 10)));
    for (std::size_t i = 0; i < shown; ++i) certs.push_back(json{{"kind", "recurrence"}, {"on", "/block"}, {"n", nonzero[i]}, {"epsilon", eps}});
    detail::require_if_asked(cfg, "recurrence", !nonzero.empty());
    r["certificates"] = std::move(certs);
    return r;
}

// ---- nilsystem gap stability -----------------------------------------------

inline json default_nilcheck_config() {
    return json{{"system", {{"type", "heisenberg"}, {"alpha", "sqrt2-1"}, {"beta", "sqrt3-1"}}},
                {"family", {"n^2"}},
                {"epsilon", 0.2},
                {"windows", {10000, 100000}}};
}

/// Return set of each family member pattern on [-R, R] for every R in
/// "windows"; stable iff all max gaps agree.
inline json cmd_nilcheck(const json& user_cfg, const RunContext& ctx) {
    json cfg = default_nilcheck_config();
    cfg.update(user_cfg);
    ReturnQuery q;
    detail::load_dynamics(cfg, q.sys, q.x, q.center);
    q.family = family_from_json(cfg.at("family"));
    q.eps = detail::get_as<double>(cfg, "epsilon");
    const auto windows = detail::get_as<std::vector<std::int64_t>>(cfg, "windows");
    if (windows.empty()) throw BadBound("no windows given");

    json r = detail::report_header("nilcheck", cfg, ctx);
    r["system"] = to_json(q.sys);
    r["family"] = to_json(q.family);
    json rows = json::array(), certs = json::array();
    std::optional<std::int64_t> first_gap;
    bool stable = true;
    for (std::size_t i = 0; i < windows.size(); ++i) {
        const auto R = windows[i];
        if (R < 0) throw BadBound("window radius must be >= 0");
        q.lo = -R;
        q.hi = R;
        const WindowSet s = return_set_1d(q);
        json row{{"radius", R}, {"count", s.count()}, {"set", to_json(s)}};
        if (s.empty()) {
            row["max_gap"] = nullptr;
            stable = false;
        } else {
            const GapReport g = max_gap(s);
            row["max_gap"] = to_json(g);
            if (!first_gap) first_gap = g.max_gap;
            stable = stable && g.max_gap == *first_gap;
            const auto syn = syndetic_certificate(s, g.max_gap);
            if (const auto* c = std::get_if<SyndeticCert>(&syn))
                certs.push_back(detail::cert_entry("syndetic", "/windows/" + std::to_string(i) + "/set", to_json(*c)));
        }
        rows.push_back(std::move(row));
    }
    r["windows"] = std::move(rows);
    r["stable"] = stable;
    detail::require_if_asked(cfg, "stable", stable);
    r["certificates"] = std::move(certs);
    return r;
}

// ---- verify ----------------------------------------------------------------

namespace detail {

inline const json& at_pointer(const json& report, const std::string& ptr) {
    try {
        return report.at(json::json_pointer(ptr));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("report has no field " + ptr + ": " + e.what());
    }
}

inline bool verify_entry(const json& report, const json& c) {
    const auto kind = get_as<std::string>(c, "kind");
    if (kind == "syndetic") return verify(window_set_from_json(at_pointer(report, get_as<std::string>(c, "on"))), syndetic_cert_from_json(field(c, "data")));
    if (kind == "thick") return verify(window_set_from_json(at_pointer(report, get_as<std::string>(c, "on"))), thick_cert_from_json(field(c, "data")));
    if (kind == "pws") return verify(window_set_from_json(at_pointer(report, get_as<std::string>(c, "on"))), pws_cert_from_json(field(c, "data")));
    if (kind == "ap")
        return verify(window_set_from_json(at_pointer(report, get_as<std::string>(c, "on"))), ap_from_json(field(c, "data")),
                      get_as<std::int64_t>(c, "k"));
    if (kind == "pws2d") {
        const GridSet e = grid_set_from_json(at_pointer(report, get_as<std::string>(c, "on")));
        if (c.contains("validity")) {
            const GridSet v = grid_set_from_json(at_pointer(report, get_as<std::string>(c, "validity")));
            return verify(e, pws_cert_2d_from_json(field(c, "data")), &v);
        }
        return verify(e, pws_cert_2d_from_json(field(c, "data")));
    }
    if (kind == "combinatorial") {
        const WindowSet s = window_set_from_json(at_pointer(report, get_as<std::string>(c, "set")));
        const PolyFamily f = family_from_json(at_pointer(report, get_as<std::string>(c, "family")));
        const GridSet members = grid_set_from_json(at_pointer(report, get_as<std::string>(c, "members")));
        const GridSet validity = grid_set_from_json(at_pointer(report, get_as<std::string>(c, "validity")));
        const CombinatorialSet cs = combinatorial_set_2d(s, f, members.box());
        return cs.members == members && cs.validity == validity;
    }
    if (kind == "shift_cover") {
        const WindowSet s = window_set_from_json(at_pointer(report, get_as<std::string>(c, "set")));
        const PolyFamily f = family_from_json(at_pointer(report, get_as<std::string>(c, "family")));
        const WindowSet target = window_set_from_json(at_pointer(report, get_as<std::string>(c, "target")));
        const auto N = get_as<std::int64_t>(c, "N");
        const BigInt a = get_as<std::int64_t>(c, "a");
        for (std::int64_t n = -N; n <= N; ++n) {
            if (!target.contains(n)) continue;
            for (const auto& p : f) {
                const BigInt v = a + p.eval(n);
                if (v < s.lo() || v > s.hi() || !s.contains(static_cast<std::int64_t>(v))) return false;
            }
        }
        return true;
    }
    if (kind == "block") {
        const json& b = at_pointer(report, get_as<std::string>(c, "on"));
        return to_json(xi_block_from_provenance(b)) == b;
    }
    if (kind == "recurrence") {
        const json& b = at_pointer(report, get_as<std::string>(c, "on"));
        const BlockProvenance p = provenance_from_json(field(b, "provenance"));
        const auto K = get_as<std::int64_t>(b, "radius");
        const XiBlock base = xi_block_at(p.sys, p.x, p.family, K, p.applied_shift, p.applied_T);
        const XiBlock moved = xi_block_at(p.sys, p.x, p.family, K, p.applied_shift + get_as<std::int64_t>(c, "n"), p.applied_T);
        return block_distance(moved, base, K) < get_as<double>(c, "epsilon");
    }
    throw ParseError("unknown certificate kind '" + kind + "'");
}

} // namespace detail

/// Re-checks every certificate listed in a report using only the report.
inline json cmd_verify(const json& report) {
    const auto& certs = detail::field(report, "certificates");
    json results = json::array();
    bool all = true;
    for (const auto& c : certs) {
        const bool ok = detail::verify_entry(report, c);
        all = all && ok;
        results.push_back(json{{"kind", c.at("kind")}, {"ok", ok}});
    }
    return json{{"experiment", "verify"}, {"of", detail::opt<std::string>(report, "experiment", "")}, {"checked", certs.size()},
                {"all_ok", all},          {"results", std::move(results)}};
}

/// The set a report exposes for CSV output, if any.
inline void write_report_csv(std::ostream& os, const json& report) {
    const auto exp = detail::opt<std::string>(report, "experiment", "");
    if (report.contains("grid") && report.at("grid").is_object()) return write_csv(os, grid_set_from_json(report.at("grid")));
    if (exp == "induced") return write_csv(os, window_set_from_json(report.at("recurrence_times")));
    if (exp == "nilcheck") return write_csv(os, window_set_from_json(report.at("windows").back().at("set")));
    if (exp == "thmb") {
        os << "N,a\n";
        for (const auto& c : report.at("covers")) os << c.at("N").get<std::int64_t>() << ',' << (c.at("a").is_null() ? "" : std::to_string(c.at("a").get<std::int64_t>())) << '\n';
        return;
    }
    if (report.contains("set") && report.at("set").is_object()) return write_csv(os, window_set_from_json(report.at("set")));
    throw ParseError("report has no set to write as CSV");
}

} // namespace pwsyn
