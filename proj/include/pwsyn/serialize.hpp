#pragma once

// JSON, raw bitmap, and CSV forms of the library's values.
//
// Bitmap layout (all little-endian):
//   WindowSet: "PSYN", u16 version, i64 lo, i64 hi, then ceil(len/64) u64 words
//   GridSet:   "PSY2", u16 version, i64 mlo, mhi, nlo, nhi, then one word
//              block per row m = mlo..mhi
// Bit k of the word stream is membership of lo + k (resp. nlo + k in a row).

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pwsyn/errors.hpp"
#include "pwsyn/families.hpp"
#include "pwsyn/induced.hpp"
#include "pwsyn/sets.hpp"
#include "pwsyn/spade.hpp"
#include "pwsyn/systems.hpp"

namespace pwsyn {

using json = nlohmann::json;

inline constexpr std::uint16_t bitmap_version = 1;

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

inline json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        return parse_decimal(j.get<std::string>());
    }
    throw ParseError("expected an integer");
}

template <class T>
void put(std::ostream& os, T v) {
    std::array<char, sizeof(T)> buf{};
    auto u = static_cast<std::make_unsigned_t<T>>(v);
    for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((u >> (8 * i)) & 0xFF);
    os.write(buf.data(), buf.size());
}

template <class T>
T take(std::istream& is) {
    std::array<unsigned char, sizeof(T)> buf{};
    if (!is.read(reinterpret_cast<char*>(buf.data()), buf.size())) throw ParseError("truncated bitmap");
    std::make_unsigned_t<T> u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) u |= static_cast<std::make_unsigned_t<T>>(buf[i]) << (8 * i);
    return static_cast<T>(u);
}

inline void put_words(std::ostream& os, const BitVector& v) {
    for (auto w : v.words()) put<std::uint64_t>(os, w);
}

inline BitVector take_words(std::istream& is, std::size_t bits) {
    std::vector<std::uint64_t> words((bits + 63) / 64);
    for (auto& w : words) w = take<std::uint64_t>(is);
    return BitVector::from_words(bits, std::move(words));
}

inline void check_magic(std::istream& is, const char* magic) {
    char m[4];
    if (!is.read(m, 4) || std::string(m, 4) != magic) throw ParseError(std::string("bad bitmap magic, expected ") + magic);
    if (take<std::uint16_t>(is) != bitmap_version) throw ParseError("unsupported bitmap version");
}

} // namespace detail

// ---- sets ------------------------------------------------------------------

inline json to_json(const WindowSet& s) { return json{{"lo", s.lo()}, {"hi", s.hi()}, {"members", s.members()}}; }

inline WindowSet window_set_from_json(const json& j) {
    const auto lo = detail::get_as<std::int64_t>(j, "lo"), hi = detail::get_as<std::int64_t>(j, "hi");
    const auto members = detail::get_as<std::vector<std::int64_t>>(j, "members");
    return WindowSet::from_members(lo, hi, members);
}

inline json to_json(const Box& b) { return json{{"mlo", b.mlo}, {"mhi", b.mhi}, {"nlo", b.nlo}, {"nhi", b.nhi}}; }

inline Box box_from_json(const json& j) {
    return Box{detail::get_as<std::int64_t>(j, "mlo"), detail::get_as<std::int64_t>(j, "mhi"), detail::get_as<std::int64_t>(j, "nlo"),
               detail::get_as<std::int64_t>(j, "nhi")};
}

inline json to_json(const GridSet& g) {
    json members = json::array();
    for (auto [m, n] : g.members()) members.push_back({m, n});
    return json{{"box", to_json(g.box())}, {"members", std::move(members)}};
}

inline GridSet grid_set_from_json(const json& j) {
    GridSet g(box_from_json(detail::field(j, "box")));
    for (const auto& p : detail::field(j, "members")) {
        if (!p.is_array() || p.size() != 2) throw ParseError("grid member must be [m, n]");
        const auto m = p[0].get<std::int64_t>(), n = p[1].get<std::int64_t>();
        if (!g.box().contains(m, n)) throw BadBound("grid member outside box");
        g.insert(m, n);
    }
    return g;
}

inline void write_bitmap(std::ostream& os, const WindowSet& s) {
    os.write("PSYN", 4);
    detail::put<std::uint16_t>(os, bitmap_version);
    detail::put<std::int64_t>(os, s.lo());
    detail::put<std::int64_t>(os, s.hi());
    detail::put_words(os, s.bits());
}

inline WindowSet read_bitmap(std::istream& is) {
    detail::check_magic(is, "PSYN");
    const auto lo = detail::take<std::int64_t>(is), hi = detail::take<std::int64_t>(is);
    if (lo > hi) throw ParseError("bitmap window lo > hi");
    return WindowSet(lo, detail::take_words(is, static_cast<std::size_t>(hi - lo + 1)));
}

inline void write_bitmap(std::ostream& os, const GridSet& g) {
    os.write("PSY2", 4);
    detail::put<std::uint16_t>(os, bitmap_version);
    const auto& b = g.box();
    for (auto v : {b.mlo, b.mhi, b.nlo, b.nhi}) detail::put<std::int64_t>(os, v);
    for (std::int64_t m = b.mlo; m <= b.mhi; ++m) detail::put_words(os, g.row(m));
}

inline GridSet read_grid_bitmap(std::istream& is) {
    detail::check_magic(is, "PSY2");
    Box b;
    b.mlo = detail::take<std::int64_t>(is);
    b.mhi = detail::take<std::int64_t>(is);
    b.nlo = detail::take<std::int64_t>(is);
    b.nhi = detail::take<std::int64_t>(is);
    GridSet g(b);
    for (std::int64_t m = b.mlo; m <= b.mhi; ++m) g.row_mut(m) = detail::take_words(is, b.cols());
    return g;
}

inline void write_csv(std::ostream& os, const WindowSet& s) {
    os << "n\n";
    for (auto n : s.members()) os << n << '\n';
}

inline void write_csv(std::ostream& os, const GridSet& g) {
    os << "m,n\n";
    for (auto [m, n] : g.members()) os << m << ',' << n << '\n';
}

// ---- certificates ----------------------------------------------------------

inline json to_json(const GapReport& g) { return json{{"max_gap", g.max_gap}, {"leading", g.leading}, {"trailing", g.trailing}}; }

inline json to_json(const SyndeticCert& c) {
    return json{{"gap_bound", c.gap_bound}, {"checked_lo", c.checked_lo}, {"checked_hi", c.checked_hi}};
}
inline SyndeticCert syndetic_cert_from_json(const json& j) {
    return SyndeticCert{detail::get_as<std::int64_t>(j, "gap_bound"), detail::get_as<std::int64_t>(j, "checked_lo"),
                        detail::get_as<std::int64_t>(j, "checked_hi")};
}

inline json to_json(const SyndeticRefutation& r) {
    return json{{"interval_start", r.interval_start}, {"interval_length", r.interval_length}, {"gap", r.gap}};
}

inline json to_json(const ThickCert& c) { return json{{"run_start", c.run_start}, {"run_length", c.run_length}}; }
inline ThickCert thick_cert_from_json(const json& j) {
    return ThickCert{detail::get_as<std::int64_t>(j, "run_start"), detail::get_as<std::int64_t>(j, "run_length")};
}

inline json to_json(const PwsCert& c) { return json{{"shift_bound", c.shift_bound}, {"start", c.start}, {"length", c.length}}; }
inline PwsCert pws_cert_from_json(const json& j) {
    return PwsCert{detail::get_as<std::int64_t>(j, "shift_bound"), detail::get_as<std::int64_t>(j, "start"),
                   detail::get_as<std::int64_t>(j, "length")};
}

inline json to_json(const PwsCert2D& c) {
    return json{{"b1", c.b1}, {"b2", c.b2}, {"m0", c.m0}, {"n0", c.n0}, {"w", c.w}, {"h", c.h}};
}
inline PwsCert2D pws_cert_2d_from_json(const json& j) {
    using detail::get_as;
    return PwsCert2D{get_as<std::int64_t>(j, "b1"), get_as<std::int64_t>(j, "b2"), get_as<std::int64_t>(j, "m0"),
                     get_as<std::int64_t>(j, "n0"), get_as<std::int64_t>(j, "w"),  get_as<std::int64_t>(j, "h")};
}

inline json to_json(const Syndetic2DCert& c) { return json{{"L", c.L}, {"checked", to_json(c.checked)}, {"vacuous", c.vacuous}}; }
inline Syndetic2DCert syndetic_2d_cert_from_json(const json& j) {
    return Syndetic2DCert{detail::get_as<std::int64_t>(j, "L"), box_from_json(detail::field(j, "checked")), detail::get_as<bool>(j, "vacuous")};
}

inline json to_json(const ArithmeticProgression& ap) { return json{{"start", ap.start}, {"step", ap.step}}; }
inline ArithmeticProgression ap_from_json(const json& j) {
    return ArithmeticProgression{detail::get_as<std::int64_t>(j, "start"), detail::get_as<std::int64_t>(j, "step")};
}

// ---- polynomials -----------------------------------------------------------

inline json to_json(const IntegralPolynomial& p) {
    return json{{"monomial", p.to_monomial_string()}, {"binomial", p.to_binomial_string()}};
}

/// Accepts a string in either form, or an object with a "binomial" or
/// "monomial" field.
inline IntegralPolynomial polynomial_from_json(const json& j) {
    if (j.is_string()) return IntegralPolynomial::parse(j.get<std::string>());
    if (j.is_object() && j.contains("binomial")) return IntegralPolynomial::parse(j.at("binomial").get<std::string>());
    if (j.is_object() && j.contains("monomial")) return IntegralPolynomial::parse(j.at("monomial").get<std::string>());
    throw ParseError("polynomial must be a string or {binomial|monomial}");
}

inline json to_json(const PolyFamily& f) {
    json out = json::array();
    for (const auto& p : f) out.push_back(to_json(p));
    return out;
}

inline PolyFamily family_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("family must be an array");
    PolyFamily f;
    for (const auto& p : j) f.push_back(polynomial_from_json(p));
    return f;
}

// ---- systems and points ----------------------------------------------------

namespace detail {
inline Param param_from_json(const json& j) {
    if (j.is_string()) return Param::parse(j.get<std::string>());
    if (j.is_number_integer()) return Param::parse(std::to_string(j.get<std::int64_t>()));
    throw ParseError("parameter must be a constant expression string");
}
} // namespace detail

inline json to_json(const SystemSpec& sys) {
    struct V {
        json operator()(const TorusRotation& t) const {
            json a = json::array();
            for (const auto& p : t.alpha) a.push_back(p.expr);
            return json{{"type", "rotation"}, {"alpha", std::move(a)}};
        }
        json operator()(const SkewProduct& s) const { return json{{"type", "skew"}, {"alpha", s.alpha.expr}}; }
        json operator()(const HeisenbergNil& h) const { return json{{"type", "heisenberg"}, {"alpha", h.alpha.expr}, {"beta", h.beta.expr}}; }
        json operator()(const IndicatorSubshift& s) const { return json{{"type", "subshift"}, {"set", to_json(s.base)}}; }
    };
    return std::visit(V{}, sys);
}

/// {"type": "rotation", "alpha": "1/4" | ["sqrt2", "1/3"]}, {"type": "skew", "alpha": ...},
/// {"type": "heisenberg", "alpha": ..., "beta": ...}, {"type": "subshift", "set": {lo, hi, members}}.
inline SystemSpec system_from_json(const json& j) {
    const auto type = detail::get_as<std::string>(j, "type");
    if (type == "rotation") {
        const auto& a = detail::field(j, "alpha");
        TorusRotation t;
        if (a.is_array()) {
            for (const auto& e : a) t.alpha.push_back(detail::param_from_json(e));
        } else {
            t.alpha.push_back(detail::param_from_json(a));
        }
        if (t.alpha.empty()) throw ParseError("rotation needs at least one angle");
        return t;
    }
    if (type == "skew") return SkewProduct{detail::param_from_json(detail::field(j, "alpha"))};
    if (type == "heisenberg") return HeisenbergNil{detail::param_from_json(detail::field(j, "alpha")), detail::param_from_json(detail::field(j, "beta"))};
    if (type == "subshift") return IndicatorSubshift{window_set_from_json(detail::field(j, "set"))};
    throw ParseError("unknown system type '" + type + "'");
}

inline json to_json(const Point& p) {
    if (const auto* c = std::get_if<ContinuousPoint>(&p)) {
        json coords = json::array();
        for (const auto& a : c->coords) coords.push_back(a.str());
        return json{{"coords", std::move(coords)}};
    }
    return json{{"center", std::get<SymbolicPoint>(p).center}};
}

/// Continuous points: {"coords": [expr, ...]}, reduced to the fundamental domain. Symbolic
/// points: {"center": k}, meaning sigma^k of the subshift's base word.
inline Point point_from_json(const SystemSpec& sys, const json& j) {
    if (std::holds_alternative<IndicatorSubshift>(sys)) {
        const auto k = detail::get_as<std::int64_t>(j, "center");
        return iterate(sys, base_point(sys), k);
    }
    const auto& arr = detail::field(j, "coords");
    if (!arr.is_array()) throw ParseError("coords must be an array");
    ContinuousPoint c;
    for (const auto& e : arr) c.coords.push_back(detail::param_from_json(e).value);
    const auto& ref = std::get<ContinuousPoint>(base_point(sys));
    if (c.coords.size() != ref.coords.size()) throw ParseError("point dimension does not match the system");
    if (std::holds_alternative<HeisenbergNil>(sys)) return detail::heisenberg_reduce(c.coords[0], c.coords[1], c.coords[2]);
    for (auto& a : c.coords) a = a.frac();
    return c;
}

// ---- induced blocks --------------------------------------------------------

inline json to_json(const BlockProvenance& p) {
    return json{{"system", to_json(p.sys)}, {"x", to_json(p.x)},       {"family", to_json(p.family)},
                {"K", p.K},                 {"applied_shift", p.applied_shift}, {"applied_T", detail::big_to_json(p.applied_T)}};
}

namespace detail {
inline json point_rows(const std::vector<std::vector<Point>>& rows, std::int64_t radius) {
    json out = json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        json row = json::array();
        for (const auto& p : rows[r]) row.push_back(to_json(p));
        out.push_back(json{{"j", static_cast<std::int64_t>(r) - radius}, {"points", std::move(row)}});
    }
    return out;
}
} // namespace detail

inline json to_json(const OmegaBlock& b) {
    return json{{"kind", "omega"}, {"provenance", to_json(b.prov)}, {"radius", b.radius}, {"entries", detail::point_rows(b.entries, b.radius)}};
}

inline json to_json(const XiBlock& b) {
    json head = json::array();
    for (const auto& p : b.head) head.push_back(to_json(p));
    json slopes = json::array();
    for (const auto& a : b.split.slopes) slopes.push_back(detail::big_to_json(a));
    return json{{"kind", "xi"},   {"provenance", to_json(b.prov)}, {"radius", b.radius},
                {"slopes", slopes}, {"head", std::move(head)},      {"tail", detail::point_rows(b.tail, b.radius)}};
}

inline BlockProvenance provenance_from_json(const json& p) {
    BlockProvenance out{system_from_json(detail::field(p, "system")), Point{}, family_from_json(detail::field(p, "family")),
                        detail::get_as<std::int64_t>(p, "K"), detail::get_as<std::int64_t>(p, "applied_shift"),
                        detail::big_from_json(detail::field(p, "applied_T"))};
    out.x = point_from_json(out.sys, detail::field(p, "x"));
    return out;
}

/// Rebuilds a block from its provenance alone (entries in the JSON are ignored).
inline XiBlock xi_block_from_provenance(const json& j) {
    const auto p = provenance_from_json(detail::field(j, "provenance"));
    return xi_block_at(p.sys, p.x, p.family, detail::get_as<std::int64_t>(j, "radius"), p.applied_shift, p.applied_T);
}

} // namespace pwsyn
