#pragma once

// Normal form for polynomial families: distinct nonzero linear slopes, all
// other members of degree >= 2, and no shift coincidence p_j^{[k]} = p_i^{[t]}
// between two higher members. Families not in normal form reduce to one by
// dropping members that are shifts of earlier ones.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pwsyn/errors.hpp"
#include "pwsyn/polynomial.hpp"

namespace pwsyn {

using PolyFamily = std::vector<IntegralPolynomial>;

inline PolyFamily parse_family(const std::vector<std::string>& items) {
    PolyFamily f;
    f.reserve(items.size());
    for (const auto& s : items) f.push_back(IntegralPolynomial::parse(s));
    return f;
}

/// Head/tail split of a family in normal form.
struct SpadeSplit {
    std::vector<std::size_t> linear;  // indices of members a*n
    std::vector<BigInt> slopes;       // a for each linear index
    std::vector<std::size_t> higher;  // indices of members with degree >= 2
};

enum class SpadeViolationKind { DuplicateSlope, LowDegree, ShiftCoincidence };

/// p_j^{[k]} = p_i^{[t]} (for DuplicateSlope k = t = 0; LowDegree has i = j).
struct SpadeViolation {
    SpadeViolationKind kind;
    std::size_t i = 0, j = 0;
    BigInt k = 0, t = 0;
};

inline void require_vanishing(const PolyFamily& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].eval(0) != 0) throw NotVanishing("member " + std::to_string(i) + " (" + f[i].to_monomial_string() + ") is nonzero at 0");
}

inline std::variant<SpadeSplit, SpadeViolation> check_spade(const PolyFamily& f) {
    require_vanishing(f);
    SpadeSplit split;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (auto a = f[i].linear_slope()) {
            for (std::size_t idx = 0; idx < split.linear.size(); ++idx)
                if (split.slopes[idx] == *a) return SpadeViolation{SpadeViolationKind::DuplicateSlope, split.linear[idx], i, 0, 0};
            split.linear.push_back(i);
            split.slopes.push_back(*a);
        } else if (f[i].degree() < 2) {
            return SpadeViolation{SpadeViolationKind::LowDegree, i, i, 0, 0};
        } else {
            split.higher.push_back(i);
        }
    }
    for (std::size_t a = 0; a < split.higher.size(); ++a)
        for (std::size_t b = a + 1; b < split.higher.size(); ++b) {
            const auto i = split.higher[a], j = split.higher[b];
            if (auto t = find_shift(f[i], f[j])) return SpadeViolation{SpadeViolationKind::ShiftCoincidence, i, j, 0, *t};
        }
    return split;
}

inline bool satisfies_spade(const PolyFamily& f) { return std::holds_alternative<SpadeSplit>(check_spade(f)); }

/// removed = kept^{[shift]} (indices into the input family).
struct ShiftCover {
    std::size_t removed = 0;
    std::size_t kept = 0;
    BigInt shift = 0;
    friend bool operator==(const ShiftCover&, const ShiftCover&) = default;
};

struct SpadeReduction {
    PolyFamily core;
    std::vector<std::size_t> core_indices;  // positions of core members in the input
    std::vector<ShiftCover> covering;
};

/// Drops every member that is a shift of an earlier kept member. Shift
/// coincidence is an equivalence relation (p^{[j]}^{[k]} = p^{[j+k]}), so
/// comparing against kept members only is exact.
inline SpadeReduction reduce_to_spade(const PolyFamily& f) {
    require_vanishing(f);
    SpadeReduction r;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].degree() < 1) throw DegreeTooLow("member " + std::to_string(i) + " is constant");
        bool dropped = false;
        for (std::size_t idx = 0; idx < r.core.size() && !dropped; ++idx) {
            if (auto j = find_shift(r.core[idx], f[i])) {
                r.covering.push_back({i, r.core_indices[idx], *j});
                dropped = true;
            }
        }
        if (!dropped) {
            r.core.push_back(f[i]);
            r.core_indices.push_back(i);
        }
    }
    return r;
}

} // namespace pwsyn
