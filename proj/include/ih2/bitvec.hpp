#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ih2/errors.hpp"

namespace ih2 {

/// Dense bit vector over GF(2), packed 64 bits per word. Addition is XOR.
/// Unused bits of the trailing word are kept zero.
class BitVec {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static BitVec unit(std::size_t size, std::size_t index) {
        BitVec v(size);
        v.set(index);
        return v;
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    BitVec& operator^=(const BitVec& other) {
        if (other.size_ != size_)
            throw InternalError("BitVec size mismatch in xor");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    /// Index of the lowest set bit, or npos when the vector is zero.
    std::size_t lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return npos;
    }

    /// Parity of the overlap popcount with another vector of equal size.
    bool dot(const BitVec& other) const {
        if (other.size_ != size_)
            throw InternalError("BitVec size mismatch in dot");
        std::size_t n = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            n += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
        return (n & 1) != 0;
    }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                const auto b = static_cast<std::size_t>(std::countr_zero(word));
                out.push_back((w << 6) + b);
                word &= word - 1;
            }
        }
        return out;
    }

    bool operator==(const BitVec&) const = default;

    std::string to_string() const {
        std::string s(size_, '0');
        for (auto i : ones()) s[i] = '1';
        return s;
    }

private:
    void check_index(std::size_t i) const {
        if (i >= size_)
            throw InternalError("BitVec index " + std::to_string(i) + " out of range " +
                                std::to_string(size_));
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ih2
