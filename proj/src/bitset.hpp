#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace boxhelly {

// Fixed-width bitset sized at runtime; just enough surface for the
// atom-membership intersection scan.
class Bitset {
public:
    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset ones(std::size_t nbits) {
        Bitset b(nbits);
        for (std::size_t i = 0; i < b.words_.size(); ++i) b.words_[i] = ~std::uint64_t{0};
        if (nbits % 64 != 0 && !b.words_.empty()) {
            b.words_.back() = (std::uint64_t{1} << (nbits % 64)) - 1;
        }
        return b;
    }

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    void and_with(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    }

    // *this = a & b, returning the resulting popcount. Operands must share a size.
    std::size_t assign_and_count(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = a.words_[i] & b.words_[i];
            words_[i] = w;
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    std::vector<std::int32_t> to_indices() const {
        std::vector<std::int32_t> out;
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<std::int32_t>(wi * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
        return out;
    }

private:
    std::size_t nbits_;
    std::vector<std::uint64_t> words_;
};

}  // namespace boxhelly
