#pragma once

// Windowed detection and certification of syndetic, thick and piecewise
// syndetic structure in Z and Z^2.
//
// Shift sets are always intervals [0, b] (boxes [0,b1]x[0,b2] in 2D): any
// finite F inside [0, max F] is dominated by the full interval, so searching
// intervals loses no witnesses and reduces the problem to a bit-parallel
// dilation followed by a longest-run (or maximal-rectangle) scan.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "pwsyn/bit_vector.hpp"
#include "pwsyn/errors.hpp"
#include "pwsyn/sets.hpp"

namespace pwsyn {

struct GapReport {
    std::int64_t max_gap = 0;   // largest difference between consecutive members
    std::int64_t leading = 0;   // first member - lo (a lower bound on the gap straddling lo)
    std::int64_t trailing = 0;  // hi - last member
};

struct SyndeticCert {
    std::int64_t gap_bound = 1;
    std::int64_t checked_lo = 0;
    std::int64_t checked_hi = -1;
};

struct SyndeticRefutation {
    std::int64_t interval_start = 0;  // first length-N subinterval missing the set
    std::int64_t interval_length = 0;
    std::int64_t gap = 0;             // distance between members around the hole (clipped to the window)
};

struct ThickCert {
    std::int64_t run_start = 0;
    std::int64_t run_length = 0;
};

/// Dilation of S by [-b, 0] contains [start, start + length - 1].
struct PwsCert {
    std::int64_t shift_bound = 0;
    std::int64_t start = 0;
    std::int64_t length = 0;
};

/// Dilation of E by [-b1,0]x[-b2,0] contains [m0, m0+w-1] x [n0, n0+h-1].
struct PwsCert2D {
    std::int64_t b1 = 0, b2 = 0;
    std::int64_t m0 = 0, n0 = 0, w = 0, h = 0;
};

struct Syndetic2DCert {
    std::int64_t L = 0;
    Box checked;
    bool vacuous = false;
};

struct Syndetic2DRefutation {
    std::int64_t m = 0, n = 0;
};

struct SliceChoice {
    std::int64_t m = 0;
    PwsCert cert;
};

struct PartitionChoice {
    std::size_t index = 0;
    std::optional<PwsCert> cert;
    bool pigeonhole_fallback = false;
};

struct ArithmeticProgression {
    std::int64_t start = 0;
    std::int64_t step = 0;
    friend bool operator==(const ArithmeticProgression&, const ArithmeticProgression&) = default;
};

inline GapReport max_gap(const WindowSet& s) {
    const auto& bits = s.bits();
    auto first = bits.next_set(0);
    if (!first) throw EmptySet("max_gap of a set with no members");
    GapReport r;
    r.leading = static_cast<std::int64_t>(*first);
    std::size_t prev = *first;
    while (auto next = bits.next_set(prev + 1)) {
        r.max_gap = std::max(r.max_gap, static_cast<std::int64_t>(*next - prev));
        prev = *next;
    }
    r.trailing = static_cast<std::int64_t>(bits.size() - 1 - prev);
    return r;
}

/// Certifies that every N consecutive integers inside [lo+N, hi-N] meet S.
/// Fails with the first length-N hole found there.
inline std::variant<SyndeticCert, SyndeticRefutation> syndetic_certificate(const WindowSet& s, std::int64_t N) {
    if (N < 1) throw BadBound("syndetic bound N must be >= 1");
    const std::int64_t clo = s.lo() + N, chi = s.hi() - N;
    SyndeticCert cert{N, clo, chi};
    if (chi - clo + 1 < N) return cert;

    // Walk maximal runs of non-members; a run meeting the interior in >= N
    // points is a hole.
    std::int64_t pos = clo;
    while (pos <= chi) {
        const auto idx = static_cast<std::size_t>(pos - s.lo());
        auto hole = s.bits().next_clear(idx);
        if (!hole) break;
        const std::int64_t hs = s.lo() + static_cast<std::int64_t>(*hole);
        if (hs > chi) break;
        auto after = s.bits().next_set(*hole);
        const std::int64_t he = after ? s.lo() + static_cast<std::int64_t>(*after) - 1 : s.hi();
        if (std::min(he, chi) - hs + 1 >= N) {
            // Extend to the full hole (back to the previous member) for the gap.
            std::int64_t back = hs;
            while (back > s.lo() && !s.contains(back - 1)) --back;
            return SyndeticRefutation{hs, N, (he - back + 1) + 1};
        }
        pos = he + 1;
    }
    return cert;
}

inline ThickCert longest_run(const WindowSet& s) {
    const auto run = s.bits().longest_run();
    return {s.lo() + static_cast<std::int64_t>(run.start), static_cast<std::int64_t>(run.length)};
}

/// Starts s of runs [s, s+n-1] inside S. S is thickly syndetic on the window
/// when this set is syndetic for every n.
inline WindowSet run_starts(const WindowSet& s, std::int64_t n) {
    if (n < 1) throw BadBound("run length must be >= 1");
    BitVector acc = s.bits();
    for (std::int64_t i = 1; i < n; ++i) acc &= s.bits().shifted_down(static_cast<std::size_t>(i));
    return WindowSet(s.lo(), std::move(acc));
}

/// Smallest b <= b_max such that the dilation of S by [-b, 0] (evaluated on
/// [lo, hi]) holds a run of length >= L. The longest such run is reported.
inline std::optional<PwsCert> pws_witness(const WindowSet& s, std::int64_t b_max, std::int64_t L) {
    if (b_max < 0) throw BadBound("b_max must be >= 0");
    if (L < 1) throw BadBound("L must be >= 1");
    if (s.empty()) return std::nullopt;
    BitVector dil = s.bits();
    for (std::int64_t b = 0; b <= b_max; ++b) {
        if (b > 0) {
            if (static_cast<std::size_t>(b) >= dil.size()) break;
            dil |= s.bits().shifted_down(static_cast<std::size_t>(b));
        }
        const auto run = dil.longest_run();
        if (static_cast<std::int64_t>(run.length) >= L)
            return PwsCert{b, s.lo() + static_cast<std::int64_t>(run.start), static_cast<std::int64_t>(run.length)};
    }
    return std::nullopt;
}

namespace detail {

/// Box dilation of E by [-b1,0]x[-b2,0], evaluated on E's own box.
inline std::vector<BitVector> dilate_box(const GridSet& e, std::int64_t b1, std::int64_t b2) {
    const auto& box = e.box();
    std::vector<BitVector> rows;
    rows.reserve(box.rows());
    for (std::int64_t m = box.mlo; m <= box.mhi; ++m) rows.push_back(e.row(m).dilated_down(static_cast<std::size_t>(b2)));
    // Rows: out[m] = OR rows[m .. m+b1], via doubling as in BitVector::dilated_down.
    const std::size_t R = rows.size();
    auto shift_or = [&](std::size_t s) {
        for (std::size_t i = 0; i + s < R; ++i) rows[i] |= rows[i + s];
    };
    const auto b = static_cast<std::size_t>(b1);
    std::size_t covered = 1;
    while (covered * 2 <= b + 1) {
        shift_or(covered);
        covered *= 2;
    }
    if (covered < b + 1) shift_or(b + 1 - covered);
    return rows;
}

struct Rect {
    std::int64_t m0 = 0, n0 = 0, w = 0, h = 0;
};

/// Largest-area maximal all-ones rectangle with m-extent >= w and n-extent
/// >= h (histogram/stack method over rows of increasing m).
inline std::optional<Rect> max_rectangle(const std::vector<BitVector>& rows, std::int64_t mlo, std::int64_t nlo, std::int64_t w,
                                         std::int64_t h) {
    if (rows.empty()) return std::nullopt;
    const std::size_t C = rows.front().size();
    std::vector<std::int64_t> height(C, 0);
    std::vector<std::size_t> stack;
    std::optional<Rect> best;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < C; ++c) height[c] = rows[r].test(c) ? height[c] + 1 : 0;
        stack.clear();
        for (std::size_t c = 0; c <= C; ++c) {
            const std::int64_t cur = c < C ? height[c] : -1;
            while (!stack.empty() && height[stack.back()] >= cur) {
                const std::int64_t H = height[stack.back()];
                stack.pop_back();
                const std::size_t left = stack.empty() ? 0 : stack.back() + 1;
                const auto W = static_cast<std::int64_t>(c - left);
                if (H >= w && W >= h && H > 0 && (!best || H * W > best->w * best->h)) {
                    best = Rect{mlo + static_cast<std::int64_t>(r) - H + 1, nlo + static_cast<std::int64_t>(left), H, W};
                }
            }
            stack.push_back(c);
        }
    }
    return best;
}

} // namespace detail

/// Lexicographically smallest (b1, b2) whose box dilation of E contains an
/// all-ones rectangle of m-extent >= w and n-extent >= h. When a validity mask
/// is given the rectangle must also lie inside it.
inline std::optional<PwsCert2D> pws_witness_2d(const GridSet& e, std::int64_t b1_max, std::int64_t b2_max, std::int64_t w,
                                               std::int64_t h, const GridSet* validity = nullptr) {
    if (b1_max < 0 || b2_max < 0) throw BadBound("shift bounds must be >= 0");
    if (w < 1 || h < 1) throw BadBound("rectangle dimensions must be >= 1");
    if (validity && !(validity->box() == e.box())) throw BadBound("validity box mismatch");
    if (e.empty()) return std::nullopt;
    const auto& box = e.box();
    for (std::int64_t b1 = 0; b1 <= b1_max; ++b1) {
        for (std::int64_t b2 = 0; b2 <= b2_max; ++b2) {
            auto rows = detail::dilate_box(e, b1, b2);
            if (validity)
                for (std::int64_t m = box.mlo; m <= box.mhi; ++m) rows[static_cast<std::size_t>(m - box.mlo)] &= validity->row(m);
            if (auto rect = detail::max_rectangle(rows, box.mlo, box.nlo, w, h))
                return PwsCert2D{b1, b2, rect->m0, rect->n0, rect->w, rect->h};
        }
    }
    return std::nullopt;
}

/// Certifies E + [-L, L]^2 covers the L-shrunk box.
inline std::variant<Syndetic2DCert, Syndetic2DRefutation> syndetic_2d_certificate(const GridSet& e, std::int64_t L) {
    if (L < 0) throw BadBound("L must be >= 0");
    const auto& box = e.box();
    Box inner{box.mlo + L, box.mhi - L, box.nlo + L, box.nhi - L};
    if (inner.mlo > inner.mhi || inner.nlo > inner.nhi) return Syndetic2DCert{L, inner, true};

    const auto span = static_cast<std::size_t>(L);
    std::vector<BitVector> rows;
    rows.reserve(box.rows());
    for (std::int64_t m = box.mlo; m <= box.mhi; ++m) rows.push_back(e.row(m).dilated_down(2 * span).shifted_up(span));
    for (std::int64_t m = inner.mlo; m <= inner.mhi; ++m) {
        BitVector acc(box.cols());
        for (std::int64_t i = -L; i <= L; ++i) acc |= rows[static_cast<std::size_t>(m + i - box.mlo)];
        const auto lo_idx = static_cast<std::size_t>(inner.nlo - box.nlo);
        auto miss = acc.next_clear(lo_idx);
        if (miss && static_cast<std::int64_t>(*miss) <= inner.nhi - box.nlo)
            return Syndetic2DRefutation{m, box.nlo + static_cast<std::int64_t>(*miss)};
    }
    return Syndetic2DCert{L, inner, false};
}

/// {n : (m, n) in E} on E's n-range.
inline WindowSet slice(const GridSet& e, std::int64_t m) {
    const auto& box = e.box();
    if (m < box.mlo || m > box.mhi) throw BadBound("row " + std::to_string(m) + " outside box");
    return WindowSet(box.nlo, e.row(m));
}

namespace detail {
/// Ordering for "strongest" witnesses: longer run, then smaller shift bound.
inline bool stronger(const PwsCert& a, const PwsCert& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.shift_bound < b.shift_bound;
}
} // namespace detail

/// Row whose slice admits the strongest pws witness; ties go to smaller m.
inline SliceChoice best_slice(const GridSet& e, std::int64_t b_max, std::int64_t L) {
    std::optional<SliceChoice> best;
    for (std::int64_t m = e.box().mlo; m <= e.box().mhi; ++m) {
        if (auto c = pws_witness(slice(e, m), b_max, L); c && (!best || detail::stronger(*c, best->cert))) best = SliceChoice{m, *c};
    }
    if (!best) throw NoRow("no slice admits a witness at b_max=" + std::to_string(b_max) + ", L=" + std::to_string(L));
    return *best;
}

/// Cell of a partition of [lo, hi] admitting the strongest pws witness. If no
/// cell admits one under (b_max, L), the densest cell is returned with
/// pigeonhole_fallback set (it holds >= window/|cells| points).
inline PartitionChoice partition_pws(const std::vector<WindowSet>& cells, std::int64_t b_max, std::int64_t L) {
    if (cells.empty()) throw NotPartition("no cells");
    const auto lo = cells.front().lo(), hi = cells.front().hi();
    BitVector uni(cells.front().length());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].lo() != lo || cells[i].hi() != hi) throw NotPartition("cell " + std::to_string(i) + " has a different window");
        if (!(uni & cells[i].bits()).none()) throw NotPartition("cell " + std::to_string(i) + " overlaps an earlier cell");
        uni |= cells[i].bits();
    }
    if (!uni.all()) throw NotPartition("cells miss points of the window");

    std::optional<PartitionChoice> best;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (auto c = pws_witness(cells[i], b_max, L); c && (!best || detail::stronger(*c, *best->cert))) best = PartitionChoice{i, *c, false};
    }
    if (best) return *best;
    std::size_t densest = 0;
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i].count() > cells[densest].count()) densest = i;
    return PartitionChoice{densest, std::nullopt, true};
}

/// First (a, d) with a, a+d, ..., a+(k-1)d in S, ordered by d then a.
inline std::optional<ArithmeticProgression> find_ap(const WindowSet& s, std::int64_t k) {
    if (k < 3) throw BadBound("progression length k must be >= 3");
    const auto width = static_cast<std::int64_t>(s.length());
    for (std::int64_t d = 1; (k - 1) * d < width; ++d) {
        BitVector acc = s.bits();
        for (std::int64_t i = 1; i < k && !acc.none(); ++i) acc &= s.bits().shifted_down(static_cast<std::size_t>(i * d));
        if (auto a = acc.next_set(0)) return ArithmeticProgression{s.lo() + static_cast<std::int64_t>(*a), d};
    }
    return std::nullopt;
}

// Re-verification by direct membership scans. These never touch the
// bit-parallel paths above.

inline bool verify(const WindowSet& s, const SyndeticCert& c) {
    for (std::int64_t i = c.checked_lo; i + c.gap_bound - 1 <= c.checked_hi; ++i) {
        bool hit = false;
        for (std::int64_t j = i; j < i + c.gap_bound && !hit; ++j) hit = s.contains(j);
        if (!hit) return false;
    }
    return c.gap_bound >= 1;
}

inline bool verify(const WindowSet& s, const ThickCert& c) {
    for (std::int64_t j = c.run_start; j < c.run_start + c.run_length; ++j)
        if (!s.contains(j)) return false;
    return c.run_length >= 0;
}

inline bool verify(const WindowSet& s, const PwsCert& c) {
    if (c.shift_bound < 0 || c.length < 1) return false;
    if (c.start < s.lo() || c.start + c.length - 1 > s.hi()) return false;
    for (std::int64_t p = c.start; p < c.start + c.length; ++p) {
        bool hit = false;
        for (std::int64_t i = 0; i <= c.shift_bound && !hit; ++i) hit = s.contains(p + i);
        if (!hit) return false;
    }
    return true;
}

inline bool verify(const GridSet& e, const PwsCert2D& c, const GridSet* validity = nullptr) {
    if (c.b1 < 0 || c.b2 < 0 || c.w < 1 || c.h < 1) return false;
    for (std::int64_t m = c.m0; m < c.m0 + c.w; ++m)
        for (std::int64_t n = c.n0; n < c.n0 + c.h; ++n) {
            if (!e.box().contains(m, n)) return false;
            if (validity && !validity->contains(m, n)) return false;
            bool hit = false;
            for (std::int64_t i = 0; i <= c.b1 && !hit; ++i)
                for (std::int64_t j = 0; j <= c.b2 && !hit; ++j) hit = e.contains(m + i, n + j);
            if (!hit) return false;
        }
    return true;
}

inline bool verify(const GridSet& e, const Syndetic2DCert& c) {
    for (std::int64_t m = c.checked.mlo; m <= c.checked.mhi; ++m)
        for (std::int64_t n = c.checked.nlo; n <= c.checked.nhi; ++n) {
            bool hit = false;
            for (std::int64_t i = -c.L; i <= c.L && !hit; ++i)
                for (std::int64_t j = -c.L; j <= c.L && !hit; ++j) hit = e.contains(m + i, n + j);
            if (!hit) return false;
        }
    return true;
}

inline bool verify(const WindowSet& s, const ArithmeticProgression& ap, std::int64_t k) {
    if (ap.step < 1) return false;
    for (std::int64_t i = 0; i < k; ++i)
        if (!s.contains(ap.start + i * ap.step)) return false;
    return true;
}

} // namespace pwsyn
