#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "pwsyn/families.hpp"
#include "pwsyn/generators.hpp"

using namespace pwsyn;

namespace {

WindowSet random_set(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, double p) {
    std::bernoulli_distribution coin(p);
    return WindowSet::from_predicate(lo, hi, [&](std::int64_t) { return coin(rng); });
}

GridSet random_grid(std::mt19937_64& rng, Box box, double p) {
    std::bernoulli_distribution coin(p);
    return GridSet::from_predicate(box, [&](std::int64_t, std::int64_t) { return coin(rng); });
}

// Sturmian coding computed in long double, independent of the Angle path.
std::vector<std::int64_t> sturmian_members_ld(std::int64_t lo, std::int64_t hi) {
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo; n <= hi; ++n) {
        const long double x = static_cast<long double>(n) * phi;
        if (x - std::floor(x) < 0.5L) out.push_back(n);
    }
    return out;
}

// Does some F ⊆ [0, b] make the union of S - f contain L consecutive points of [lo, hi]?
bool brute_pws(const WindowSet& s, std::int64_t b, std::int64_t L) {
    const auto lo = s.lo(), hi = s.hi();
    for (std::uint32_t mask = 1; mask < (1u << (b + 1)); ++mask) {
        std::int64_t run = 0;
        for (std::int64_t k = lo; k <= hi; ++k) {
            bool in = false;
            for (std::int64_t f = 0; f <= b && !in; ++f)
                if (mask >> f & 1u) in = s.contains(k + f);
            run = in ? run + 1 : 0;
            if (run >= L) return true;
        }
    }
    return false;
}

std::int64_t naive_dilated_run(const WindowSet& s, std::int64_t b) {
    std::int64_t run = 0, best = 0;
    for (std::int64_t k = s.lo(); k <= s.hi(); ++k) {
        bool in = false;
        for (std::int64_t f = 0; f <= b && !in; ++f) in = s.contains(k + f);
        run = in ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

bool brute_rect_exists(const GridSet& e, std::int64_t b1, std::int64_t b2, std::int64_t w, std::int64_t h) {
    const auto& box = e.box();
    auto dil = [&](std::int64_t m, std::int64_t n) {
        for (std::int64_t i = 0; i <= b1; ++i)
            for (std::int64_t j = 0; j <= b2; ++j)
                if (e.contains(m + i, n + j)) return true;
        return false;
    };
    for (std::int64_t m0 = box.mlo; m0 + w - 1 <= box.mhi; ++m0)
        for (std::int64_t n0 = box.nlo; n0 + h - 1 <= box.nhi; ++n0) {
            bool ok = true;
            for (std::int64_t m = m0; m < m0 + w && ok; ++m)
                for (std::int64_t n = n0; n < n0 + h && ok; ++n) ok = dil(m, n);
            if (ok) return true;
        }
    return false;
}

std::optional<ArithmeticProgression> brute_ap(const WindowSet& s, std::int64_t k) {
    for (std::int64_t d = 1; (k - 1) * d <= s.hi() - s.lo(); ++d)
        for (std::int64_t a = s.lo(); a + (k - 1) * d <= s.hi(); ++a) {
            bool ok = true;
            for (std::int64_t i = 0; i < k && ok; ++i) ok = s.contains(a + i * d);
            if (ok) return ArithmeticProgression{a, d};
        }
    return std::nullopt;
}

} // namespace

TEST(WindowSet, MembershipIsFalseOutsideWindow) {
    WindowSet s = WindowSet::full(-3, 3);
    EXPECT_TRUE(s.contains(-3));
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(4));
    EXPECT_FALSE(s.contains(-4));
    EXPECT_THROW(s.insert(4), BadBound);
    EXPECT_THROW(WindowSet(2, 1), BadBound);
}

TEST(MaxGap, ArithmeticProgression) {
    const auto s = WindowSet::from_predicate(0, 30, [](std::int64_t n) { return n % 3 == 0; });
    EXPECT_EQ(max_gap(s).max_gap, 3);
}

TEST(MaxGap, FullWindow) { EXPECT_EQ(max_gap(WindowSet::full(-50, 50)).max_gap, 1); }

TEST(MaxGap, EmptyThrows) { EXPECT_THROW(max_gap(WindowSet(0, 10)), EmptySet); }

TEST(MaxGap, LeadingAndTrailingReportedSeparately) {
    const std::vector<std::int64_t> m{3, 5, 6};
    const auto g = max_gap(WindowSet::from_members(0, 10, m));
    EXPECT_EQ(g.max_gap, 2);
    EXPECT_EQ(g.leading, 3);
    EXPECT_EQ(g.trailing, 4);
}

TEST(MaxGap, GoldenSturmianHasGapThree) {
    const auto s = sturmian(parse_angle("golden"), 0, 10000);
    const auto oracle = sturmian_members_ld(0, 10000);
    ASSERT_EQ(s.members(), oracle);
    std::int64_t g = 0;
    for (std::size_t i = 1; i < oracle.size(); ++i) g = std::max(g, oracle[i] - oracle[i - 1]);
    EXPECT_EQ(g, 3);
    EXPECT_EQ(max_gap(s).max_gap, g);
}

TEST(Syndetic, EvensWithGapTwo) {
    const auto s = congruence_class(2, 0, -100, 100);
    auto r = syndetic_certificate(s, 2);
    ASSERT_TRUE(std::holds_alternative<SyndeticCert>(r));
    EXPECT_TRUE(verify(s, std::get<SyndeticCert>(r)));
}

TEST(Syndetic, EvensRefutedAtOne) {
    const auto s = congruence_class(2, 0, -100, 100);
    auto r = syndetic_certificate(s, 1);
    ASSERT_TRUE(std::holds_alternative<SyndeticRefutation>(r));
    const auto& ref = std::get<SyndeticRefutation>(r);
    EXPECT_EQ(ref.gap, 2);
    EXPECT_EQ(ref.interval_start, -99);
    EXPECT_FALSE(s.contains(ref.interval_start));
}

TEST(Syndetic, SturmianAtThree) {
    const auto s = sturmian(parse_angle("golden"), 0, 10000);
    auto r = syndetic_certificate(s, 3);
    ASSERT_TRUE(std::holds_alternative<SyndeticCert>(r));
    EXPECT_TRUE(verify(s, std::get<SyndeticCert>(r)));
    EXPECT_TRUE(std::holds_alternative<SyndeticRefutation>(syndetic_certificate(s, 2)));
}

TEST(Syndetic, BadBound) { EXPECT_THROW(syndetic_certificate(WindowSet::full(0, 5), 0), BadBound); }

TEST(LongestRun, Examples) {
    auto s = WindowSet::from_predicate(0, 50, [](std::int64_t n) { return (n >= 10 && n <= 20) || n == 40; });
    const auto c = longest_run(s);
    EXPECT_EQ(c.run_start, 10);
    EXPECT_EQ(c.run_length, 11);
    EXPECT_EQ(longest_run(WindowSet(0, 10)).run_length, 0);
    const auto blocks = WindowSet::from_predicate(0, 10000, [](std::int64_t n) { return n % 100 < 10; });
    EXPECT_EQ(longest_run(blocks).run_length, 10);
}

TEST(RunStarts, ThicklySyndeticHelper) {
    const auto blocks = WindowSet::from_predicate(0, 999, [](std::int64_t n) { return n % 10 < 5; });
    const auto starts = run_starts(blocks, 3);
    for (std::int64_t n = 0; n <= 997; ++n) EXPECT_EQ(starts.contains(n), n % 10 <= 2) << n;
}

TEST(PwsWitness, ThickBlockNeedsNoShift) {
    const auto c = pws_witness(WindowSet::full(0, 40), 5, 41);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->shift_bound, 0);
}

TEST(PwsWitness, PeriodicBlocksMergeAtNinety) {
    const auto s = WindowSet::from_predicate(0, 10000, [](std::int64_t n) { return n % 100 < 10; });
    const auto c = pws_witness(s, 90, 100);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->shift_bound, 90);
    EXPECT_TRUE(verify(s, *c));
    EXPECT_FALSE(pws_witness(s, 89, 100));
    // direct union of S - i for i in [0, 90] covers [0, 9909]
    for (std::int64_t p = 0; p <= 9909; ++p) {
        bool hit = false;
        for (std::int64_t i = 0; i <= 90 && !hit; ++i) hit = s.contains(p + i);
        ASSERT_TRUE(hit) << p;
    }
}

TEST(PwsWitness, EmptySetHasNone) { EXPECT_FALSE(pws_witness(WindowSet(0, 100), 10, 1)); }

TEST(PwsWitness, AgreesWithUnionOverAllShiftSets) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 150; ++t) {
        const std::int64_t lo = static_cast<std::int64_t>(rng() % 40) - 20;
        const auto s = random_set(rng, lo, lo + 40 + static_cast<std::int64_t>(rng() % 30), 0.2 + 0.5 * (t % 3) / 2.0);
        for (std::int64_t b = 0; b <= 4; ++b)
            for (std::int64_t L : {1, 3, 6, 12}) {
                const auto c = pws_witness(s, b, L);
                EXPECT_EQ(c.has_value(), brute_pws(s, b, L)) << "t=" << t << " b=" << b << " L=" << L;
                if (c) { EXPECT_TRUE(verify(s, *c)); }
            }
    }
}

TEST(PwsWitness, MonotoneInBAndL) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 60; ++t) {
        const auto s = random_set(rng, 0, 300, 0.3);
        for (std::int64_t b = 0; b <= 6; ++b)
            for (std::int64_t L = 1; L <= 40; L += 3) {
                if (!pws_witness(s, b, L)) continue;
                EXPECT_TRUE(pws_witness(s, b + 1, L));
                if (L > 1) { EXPECT_TRUE(pws_witness(s, b, L - 1)); }
            }
    }
}

TEST(PwsWitness, DilationIdentity) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const auto s = random_set(rng, -50, 250, 0.7);
        const auto run = longest_run(s).run_length;
        for (std::int64_t L = 1; L <= 20; ++L) EXPECT_EQ(pws_witness(s, 0, L).has_value(), run >= L);
    }
}

TEST(PwsWitness, ShiftInvariance) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 50; ++t) {
        const auto s = random_set(rng, 0, 200, 0.4);
        const std::int64_t shift = static_cast<std::int64_t>(rng() % 1000) - 500;
        const auto moved = s.shifted(shift);
        for (std::int64_t b = 0; b <= 4; ++b)
            for (std::int64_t L : {2, 5, 10, 20}) {
                const auto a = pws_witness(s, b, L), c = pws_witness(moved, b, L);
                ASSERT_EQ(a.has_value(), c.has_value());
                if (a) {
                    EXPECT_EQ(a->shift_bound, c->shift_bound);
                    EXPECT_EQ(a->start + shift, c->start);
                }
            }
    }
}

TEST(PwsWitness2D, FullBox) {
    const Box box{0, 20, 0, 20};
    const auto c = pws_witness_2d(GridSet::full(box), 3, 3, 5, 5);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->b1, 0);
    EXPECT_EQ(c->b2, 0);
}

TEST(PwsWitness2D, EvenLatticeNeedsOneOne) {
    const Box box{-20, 20, -20, 20};
    const auto e = GridSet::from_predicate(box, [](std::int64_t m, std::int64_t n) { return m % 2 == 0 && n % 2 == 0; });
    const auto c = pws_witness_2d(e, 3, 3, 10, 10);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->b1, 1);
    EXPECT_EQ(c->b2, 1);
    EXPECT_TRUE(verify(e, *c));
    for (std::int64_t b1 = 0; b1 <= 1; ++b1)
        for (std::int64_t b2 = 0; b2 <= 1; ++b2) EXPECT_EQ(brute_rect_exists(e, b1, b2, 10, 10), b1 == 1 && b2 == 1);
}

TEST(PwsWitness2D, EmptyHasNone) { EXPECT_FALSE(pws_witness_2d(GridSet(Box{0, 5, 0, 5}), 3, 3, 1, 1)); }

TEST(PwsWitness2D, MatchesBruteForceLexicographicSearch) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        const Box box{0, 11 + static_cast<std::int64_t>(rng() % 6), -5, 6 + static_cast<std::int64_t>(rng() % 6)};
        const auto e = random_grid(rng, box, 0.25 + 0.1 * (t % 4));
        const std::int64_t w = 2 + t % 4, h = 2 + (t / 4) % 4;
        const auto c = pws_witness_2d(e, 3, 3, w, h);
        std::optional<std::pair<std::int64_t, std::int64_t>> expect;
        for (std::int64_t b1 = 0; b1 <= 3 && !expect; ++b1)
            for (std::int64_t b2 = 0; b2 <= 3 && !expect; ++b2)
                if (brute_rect_exists(e, b1, b2, w, h)) expect = std::make_pair(b1, b2);
        ASSERT_EQ(c.has_value(), expect.has_value()) << t;
        if (c) {
            EXPECT_EQ(std::make_pair(c->b1, c->b2), *expect);
            EXPECT_GE(c->w, w);
            EXPECT_GE(c->h, h);
            EXPECT_TRUE(verify(e, *c));
        }
    }
}

TEST(PwsWitness2D, ValidityMaskRestrictsRectangle) {
    const Box box{0, 19, 0, 19};
    const auto e = GridSet::full(box);
    const auto valid = GridSet::from_predicate(box, [](std::int64_t m, std::int64_t) { return m < 8; });
    const auto c = pws_witness_2d(e, 0, 0, 8, 5, &valid);
    ASSERT_TRUE(c);
    EXPECT_TRUE(verify(e, *c, &valid));
    EXPECT_FALSE(pws_witness_2d(e, 2, 2, 9, 1, &valid));
}

TEST(Syndetic2D, Examples) {
    const Box box{-15, 15, -15, 15};
    EXPECT_TRUE(std::holds_alternative<Syndetic2DCert>(syndetic_2d_certificate(GridSet::full(box), 0)));
    const auto thirds = GridSet::from_predicate(box, [](std::int64_t m, std::int64_t) { return ((m % 3) + 3) % 3 == 0; });
    const auto ok = syndetic_2d_certificate(thirds, 1);
    ASSERT_TRUE(std::holds_alternative<Syndetic2DCert>(ok));
    EXPECT_TRUE(verify(thirds, std::get<Syndetic2DCert>(ok)));
    EXPECT_TRUE(std::holds_alternative<Syndetic2DRefutation>(syndetic_2d_certificate(thirds, 0)));
    EXPECT_THROW(syndetic_2d_certificate(thirds, -1), BadBound);
}

TEST(Syndetic2D, AgreesWithNaiveCover) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 60; ++t) {
        const auto e = random_grid(rng, Box{0, 14, 0, 14}, 0.08 + 0.04 * (t % 5));
        for (std::int64_t L = 0; L <= 3; ++L) {
            const auto r = syndetic_2d_certificate(e, L);
            const Syndetic2DCert probe{L, Box{L, 14 - L, L, 14 - L}, false};
            EXPECT_EQ(std::holds_alternative<Syndetic2DCert>(r), verify(e, probe)) << t << ' ' << L;
            if (const auto* ref = std::get_if<Syndetic2DRefutation>(&r)) {
                for (std::int64_t i = -L; i <= L; ++i)
                    for (std::int64_t j = -L; j <= L; ++j) EXPECT_FALSE(e.contains(ref->m + i, ref->n + j));
            }
        }
    }
}

TEST(Slice, MatchesRowExtraction) {
    std::mt19937_64 rng(23);
    const Box box{-7, 9, -4, 30};
    const auto e = random_grid(rng, box, 0.4);
    for (std::int64_t m = box.mlo; m <= box.mhi; ++m) {
        const auto s = slice(e, m);
        EXPECT_EQ(s.lo(), box.nlo);
        EXPECT_EQ(s.hi(), box.nhi);
        for (std::int64_t n = box.nlo; n <= box.nhi; ++n) EXPECT_EQ(s.contains(n), e.contains(m, n));
    }
    EXPECT_THROW(slice(e, 10), BadBound);
}

TEST(Slice, EvenRowsAreFull) {
    const Box box{-4, 4, -10, 10};
    const auto e = GridSet::from_predicate(box, [](std::int64_t m, std::int64_t) { return m % 2 == 0; });
    EXPECT_EQ(slice(e, 0), WindowSet::full(-10, 10));
}

TEST(BestSlice, SinglePopulatedRow) {
    const Box box{0, 9, 0, 30};
    const auto e = GridSet::from_predicate(box, [](std::int64_t m, std::int64_t n) { return m == 5 && n % 2 == 0; });
    const auto c = best_slice(e, 2, 10);
    EXPECT_EQ(c.m, 5);
    EXPECT_EQ(c.cert.shift_bound, 1);
}

TEST(BestSlice, TiesGoToSmallerRow) {
    const Box box{-3, 3, 0, 20};
    const auto e = GridSet::from_predicate(box, [](std::int64_t m, std::int64_t) { return m == 2 || m == -1; });
    EXPECT_EQ(best_slice(e, 0, 5).m, -1);
}

TEST(BestSlice, NoRowThrows) { EXPECT_THROW(best_slice(GridSet(Box{0, 3, 0, 3}), 1, 1), NoRow); }

TEST(PartitionPws, EvensAndOdds) {
    const auto ev = congruence_class(2, 0, 0, 99), od = congruence_class(2, 1, 0, 99);
    const auto c = partition_pws({ev, od}, 3, 20);
    ASSERT_TRUE(c.cert);
    EXPECT_EQ(c.cert->shift_bound, 1);
    EXPECT_FALSE(c.pigeonhole_fallback);
}

TEST(PartitionPws, WholeWindow) {
    const auto c = partition_pws({WindowSet::full(0, 99)}, 3, 20);
    EXPECT_EQ(c.index, 0u);
    ASSERT_TRUE(c.cert);
    EXPECT_EQ(c.cert->shift_bound, 0);
}

TEST(PartitionPws, RandomThreeCellsMatchExhaustiveSweep) {
    std::mt19937_64 rng(24);
    std::vector<WindowSet> cells(3, WindowSet(0, 10000));
    for (std::int64_t n = 0; n <= 10000; ++n) cells[rng() % 3].insert(n);
    const auto c = partition_pws(cells, 8, 200);
    // exhaustive: per cell the first b whose naive dilation has a run >= 200,
    // then the longest such run wins, ties to smaller b, then smaller index
    std::optional<std::pair<std::size_t, PwsCert>> best;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::int64_t b = 0; b <= 8; ++b) {
            const auto run = naive_dilated_run(cells[i], b);
            if (run < 200) continue;
            if (!best || run > best->second.length || (run == best->second.length && b < best->second.shift_bound))
                best = std::make_pair(i, PwsCert{b, 0, run});
            break;
        }
    ASSERT_TRUE(best);
    ASSERT_TRUE(c.cert);
    EXPECT_EQ(c.index, best->first);
    EXPECT_TRUE(verify(cells[c.index], *c.cert));
}

TEST(PartitionPws, FallbackToDensestCell) {
    std::vector<WindowSet> cells{congruence_class(3, 0, 0, 29), congruence_class(3, 1, 0, 29), congruence_class(3, 2, 0, 29)};
    const auto c = partition_pws(cells, 0, 2);
    EXPECT_TRUE(c.pigeonhole_fallback);
    EXPECT_FALSE(c.cert);
    EXPECT_GE(cells[c.index].count() * cells.size(), static_cast<std::size_t>(30));
}

TEST(PartitionPws, RejectsNonPartitions) {
    const auto ev = congruence_class(2, 0, 0, 9);
    EXPECT_THROW(partition_pws({ev, ev}, 1, 1), NotPartition);
    EXPECT_THROW(partition_pws({ev}, 1, 1), NotPartition);
    EXPECT_THROW(partition_pws({ev, congruence_class(2, 1, 0, 10)}, 1, 1), NotPartition);
    EXPECT_THROW(partition_pws({}, 1, 1), NotPartition);
}

TEST(FindAp, Examples) {
    const auto odds = congruence_class(2, 1, 0, 100);
    EXPECT_EQ(find_ap(odds, 4), (ArithmeticProgression{1, 2}));
    const std::vector<std::int64_t> m{0, 1, 2};
    EXPECT_EQ(find_ap(WindowSet::from_members(0, 2, m), 3), (ArithmeticProgression{0, 1}));
    EXPECT_THROW(find_ap(odds, 2), BadBound);
    const auto st = sturmian(parse_angle("golden"), 0, 10000);
    const auto ap = find_ap(st, 6);
    ASSERT_TRUE(ap);
    EXPECT_TRUE(verify(st, *ap, 6));
}

TEST(FindAp, MatchesTripleLoop) {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 80; ++t) {
        const std::int64_t len = 50 + static_cast<std::int64_t>(rng() % 950);
        const auto s = random_set(rng, -100, -100 + len, 0.05 + 0.05 * (t % 6));
        for (std::int64_t k : {3, 4, 5}) {
            const auto a = find_ap(s, k);
            EXPECT_EQ(a, brute_ap(s, k)) << t << ' ' << k;
            if (a) { EXPECT_TRUE(verify(s, *a, k)); }
        }
    }
}

TEST(CertificateSoundness, RandomSets) {
    std::mt19937_64 rng(26);
    for (int t = 0; t < 100; ++t) {
        const auto s = random_set(rng, 0, 200 + static_cast<std::int64_t>(rng() % 800), 0.1 + 0.8 * (t % 10) / 10.0);
        if (s.empty()) continue;
        const auto g = max_gap(s).max_gap;
        for (std::int64_t N : {std::int64_t{1}, g, g + 1}) {
            const auto r = syndetic_certificate(s, N);
            if (const auto* c = std::get_if<SyndeticCert>(&r)) { EXPECT_TRUE(verify(s, *c)); }
        }
        EXPECT_TRUE(verify(s, longest_run(s)));
        for (std::int64_t b = 0; b <= 5; ++b)
            if (auto c = pws_witness(s, b, 15)) { EXPECT_TRUE(verify(s, *c)); }
    }
}
