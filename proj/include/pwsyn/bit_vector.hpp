#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pwsyn {

/// Fixed-length bit vector over 64-bit words. Bits past size() are kept zero
/// so word-level operations never leak garbage into counts or runs.
class BitVector {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t size, bool value = false)
        : size_(size), words_((size + word_bits - 1) / word_bits, value ? ~word_type{0} : 0) {
        trim();
    }

    std::size_t size() const noexcept { return size_; }

    /// Adopts raw little-endian words; bits past size are cleared.
    static BitVector from_words(std::size_t size, std::vector<word_type> words) {
        BitVector v(size);
        if (words.size() != v.words_.size()) throw std::invalid_argument("word count does not match bit size");
        v.words_ = std::move(words);
        if (size % word_bits != 0) v.words_.back() &= (word_type{1} << (size % word_bits)) - 1;
        return v;
    }
    const std::vector<word_type>& words() const noexcept { return words_; }

    bool test(std::size_t i) const noexcept {
        return i < size_ && ((words_[i / word_bits] >> (i % word_bits)) & 1u);
    }
    void set(std::size_t i, bool value = true) noexcept {
        auto& w = words_[i / word_bits];
        const word_type mask = word_type{1} << (i % word_bits);
        w = value ? (w | mask) : (w & ~mask);
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }
    bool all() const noexcept { return count() == size_; }

    BitVector& operator|=(const BitVector& o) noexcept {
        for (std::size_t k = 0; k < std::min(words_.size(), o.words_.size()); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    BitVector& operator&=(const BitVector& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= k < o.words_.size() ? o.words_[k] : 0;
        return *this;
    }
    friend BitVector operator|(BitVector a, const BitVector& b) noexcept { return a |= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) noexcept { return a &= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    /// result[k] = this[k + shift]; bits shifted in from beyond the end are 0.
    BitVector shifted_down(std::size_t shift) const {
        BitVector out(size_);
        if (shift >= size_) return out;
        const std::size_t ws = shift / word_bits, bs = shift % word_bits;
        for (std::size_t k = 0; k + ws < words_.size(); ++k) {
            word_type w = words_[k + ws] >> bs;
            if (bs != 0 && k + ws + 1 < words_.size()) w |= words_[k + ws + 1] << (word_bits - bs);
            out.words_[k] = w;
        }
        out.trim();
        return out;
    }

    /// result[k] = this[k - shift]; bits shifted in below index 0 are 0.
    BitVector shifted_up(std::size_t shift) const {
        BitVector out(size_);
        if (shift >= size_) return out;
        const std::size_t ws = shift / word_bits, bs = shift % word_bits;
        for (std::size_t k = words_.size(); k-- > ws;) {
            word_type w = words_[k - ws] << bs;
            if (bs != 0 && k > ws) w |= words_[k - ws - 1] >> (word_bits - bs);
            out.words_[k] = w;
        }
        out.trim();
        return out;
    }

    /// OR of shifted_down(i) for i in [0, b]: bit k is set iff some bit in
    /// [k, k+b] is set. Uses log2(b) doubling steps.
    BitVector dilated_down(std::size_t b) const {
        BitVector out = *this;
        std::size_t covered = 1;  // out currently covers shifts [0, covered-1]
        while (covered * 2 <= b + 1) {
            out |= out.shifted_down(covered);
            covered *= 2;
        }
        if (covered < b + 1) out |= out.shifted_down(b + 1 - covered);
        return out;
    }

    std::optional<std::size_t> next_set(std::size_t from) const noexcept {
        if (from >= size_) return std::nullopt;
        std::size_t k = from / word_bits;
        word_type w = words_[k] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (w != 0) return k * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return std::nullopt;
            w = words_[k];
        }
    }
    std::optional<std::size_t> next_clear(std::size_t from) const noexcept {
        if (from >= size_) return std::nullopt;
        std::size_t k = from / word_bits;
        word_type w = ~words_[k] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (w != 0) {
                const std::size_t pos = k * word_bits + static_cast<std::size_t>(std::countr_zero(w));
                return pos < size_ ? std::optional<std::size_t>(pos) : std::nullopt;
            }
            if (++k == words_.size()) return std::nullopt;
            w = ~words_[k];
        }
    }

    struct Run {
        std::size_t start = 0;
        std::size_t length = 0;
    };

    /// Longest run of set bits; earliest one wins ties. length 0 when empty.
    Run longest_run() const noexcept {
        Run best;
        std::size_t pos = 0;
        while (auto s = next_set(pos)) {
            const std::size_t e = next_clear(*s).value_or(size_);
            if (e - *s > best.length) best = {*s, e - *s};
            pos = e;
        }
        return best;
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            word_type w = words_[k];
            while (w != 0) {
                f(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    void trim() noexcept {
        if (size_ % word_bits != 0 && !words_.empty()) words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

} // namespace pwsyn
