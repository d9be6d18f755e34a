#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kst {

// Dynamic bitset over 64-bit words. Width is fixed at construction;
// intersection and popcount are the hot operations in the solver.
// Unused tail bits are kept zero by every operation.
class Bitset {
public:
    Bitset() : nbits_(0) {}
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset full(int nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.mask_tail();
        return b;
    }

    int size_bits() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int find_first() const { return find_next(-1); }
    // First set bit strictly after prev, or -1.
    int find_next(int prev) const {
        int i = prev + 1;
        if (i >= nbits_) return -1;
        int wi = i >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return wi * 64 + std::countr_zero(w);
            if (++wi >= static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    // this AND NOT o
    Bitset andnot(const Bitset& o) const {
        check_width(o);
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    int count_and(const Bitset& o) const {
        check_width(o);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool intersects(const Bitset& o) const {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = find_first(); i != -1; i = find_next(i)) out.push_back(i);
        return out;
    }

    template <class F>
    void for_each(F f) const {
        for (int i = find_first(); i != -1; i = find_next(i)) f(i);
    }

private:
    void check_width(const Bitset& o) const {
        if (nbits_ != o.nbits_) throw std::invalid_argument("Bitset: width mismatch");
    }
    void mask_tail() {
        if (nbits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
        if (nbits_ == 0 && !words_.empty()) words_.back() = 0;
    }

    int nbits_;
    std::vector<std::uint64_t> words_;
};

}  // namespace kst
