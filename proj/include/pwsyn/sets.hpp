#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pwsyn/bit_vector.hpp"
#include "pwsyn/errors.hpp"

namespace pwsyn {

/// A finite subset of Z observed on the window [lo, hi]. Membership is total
/// on the window and false outside it.
class WindowSet {
public:
    WindowSet() : WindowSet(0, 0) {}
    WindowSet(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
        if (lo > hi) throw BadBound("window lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
        bits_ = BitVector(static_cast<std::size_t>(hi - lo + 1));
    }
    WindowSet(std::int64_t lo, BitVector bits) : lo_(lo), hi_(lo + static_cast<std::int64_t>(bits.size()) - 1), bits_(std::move(bits)) {
        if (bits_.size() == 0) throw BadBound("empty window");
    }

    static WindowSet from_members(std::int64_t lo, std::int64_t hi, std::span<const std::int64_t> members) {
        WindowSet s(lo, hi);
        for (auto m : members) {
            if (m < lo || m > hi) throw BadBound("member " + std::to_string(m) + " outside window");
            s.insert(m);
        }
        return s;
    }
    static WindowSet full(std::int64_t lo, std::int64_t hi) {
        WindowSet s(lo, hi);
        s.bits_ = BitVector(s.bits_.size(), true);
        return s;
    }
    template <class Pred>
    static WindowSet from_predicate(std::int64_t lo, std::int64_t hi, Pred&& pred) {
        WindowSet s(lo, hi);
        for (std::int64_t n = lo; n <= hi; ++n)
            if (pred(n)) s.insert(n);
        return s;
    }

    std::int64_t lo() const noexcept { return lo_; }
    std::int64_t hi() const noexcept { return hi_; }
    std::size_t length() const noexcept { return bits_.size(); }
    std::size_t count() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }
    const BitVector& bits() const noexcept { return bits_; }

    bool contains(std::int64_t n) const noexcept {
        return n >= lo_ && n <= hi_ && bits_.test(static_cast<std::size_t>(n - lo_));
    }
    void insert(std::int64_t n) {
        if (n < lo_ || n > hi_) throw BadBound("insert outside window");
        bits_.set(static_cast<std::size_t>(n - lo_));
    }

    std::vector<std::int64_t> members() const {
        std::vector<std::int64_t> out;
        out.reserve(count());
        bits_.for_each_set([&](std::size_t k) { out.push_back(lo_ + static_cast<std::int64_t>(k)); });
        return out;
    }

    /// S + t, with the window translated along with it.
    WindowSet shifted(std::int64_t t) const { return WindowSet(lo_ + t, bits_); }

    friend bool operator==(const WindowSet&, const WindowSet&) = default;

private:
    std::int64_t lo_;
    std::int64_t hi_;
    BitVector bits_;
};

struct Box {
    std::int64_t mlo = 0, mhi = 0, nlo = 0, nhi = 0;

    bool contains(std::int64_t m, std::int64_t n) const noexcept { return m >= mlo && m <= mhi && n >= nlo && n <= nhi; }
    std::size_t rows() const noexcept { return static_cast<std::size_t>(mhi - mlo + 1); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(nhi - nlo + 1); }
    friend bool operator==(const Box&, const Box&) = default;
};

/// A finite subset of Z^2 inside a box. Stored row-major: one bit row per m,
/// bits indexed by n - nlo.
class GridSet {
public:
    GridSet() : GridSet(Box{}) {}
    explicit GridSet(Box box) : box_(box) {
        if (box.mlo > box.mhi || box.nlo > box.nhi) throw BadBound("degenerate box");
        rows_.assign(box.rows(), BitVector(box.cols()));
    }
    static GridSet full(Box box) {
        GridSet g(box);
        for (auto& r : g.rows_) r = BitVector(box.cols(), true);
        return g;
    }
    template <class Pred>
    static GridSet from_predicate(Box box, Pred&& pred) {
        GridSet g(box);
        for (std::int64_t m = box.mlo; m <= box.mhi; ++m)
            for (std::int64_t n = box.nlo; n <= box.nhi; ++n)
                if (pred(m, n)) g.insert(m, n);
        return g;
    }

    const Box& box() const noexcept { return box_; }
    bool contains(std::int64_t m, std::int64_t n) const noexcept {
        return box_.contains(m, n) && rows_[static_cast<std::size_t>(m - box_.mlo)].test(static_cast<std::size_t>(n - box_.nlo));
    }
    void insert(std::int64_t m, std::int64_t n) {
        if (!box_.contains(m, n)) throw BadBound("insert outside box");
        rows_[static_cast<std::size_t>(m - box_.mlo)].set(static_cast<std::size_t>(n - box_.nlo));
    }
    const BitVector& row(std::int64_t m) const { return rows_.at(static_cast<std::size_t>(m - box_.mlo)); }
    BitVector& row_mut(std::int64_t m) { return rows_.at(static_cast<std::size_t>(m - box_.mlo)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (const auto& r : rows_) c += r.count();
        return c;
    }
    bool empty() const noexcept { return count() == 0; }

    std::vector<std::pair<std::int64_t, std::int64_t>> members() const {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (std::int64_t m = box_.mlo; m <= box_.mhi; ++m)
            row(m).for_each_set([&](std::size_t k) { out.emplace_back(m, box_.nlo + static_cast<std::int64_t>(k)); });
        return out;
    }

    GridSet& operator&=(const GridSet& o) {
        if (!(box_ == o.box_)) throw BadBound("box mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] &= o.rows_[i];
        return *this;
    }

    friend bool operator==(const GridSet&, const GridSet&) = default;

private:
    Box box_;
    std::vector<BitVector> rows_;
};

} // namespace pwsyn
