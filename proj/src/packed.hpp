#pragma once

// Fixed-width bit strings and a flattened code-tuple for the hot loops of the
// structure and delay analyses. Not part of the public interface.

#include "codetuple/code_tuple.hpp"
#include "codetuple/error.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace codetuple::detail {

inline constexpr std::size_t max_packed_length = 40;

/// Up to 62 bits, first bit in the most significant used position.
struct Packed {
    std::uint64_t bits = 0;
    std::uint32_t len = 0;

    bool empty() const noexcept { return len == 0; }
    bool first() const noexcept { return (bits >> (len - 1)) & 1U; }

    /// Dense numbering of all strings ordered by (length, value).
    std::uint64_t key() const noexcept { return ((std::uint64_t{1} << len) - 1) + bits; }

    Packed take(std::uint32_t n) const noexcept { return {bits >> (len - n), n}; }
    Packed drop(std::uint32_t n) const noexcept {
        const std::uint32_t rest = len - n;
        return {rest == 0 ? 0 : bits & ((std::uint64_t{1} << rest) - 1), rest};
    }
    Packed append(Packed tail) const noexcept { return {(bits << tail.len) | tail.bits, len + tail.len}; }
    Packed append_bit(bool b) const noexcept { return {(bits << 1) | static_cast<std::uint64_t>(b), len + 1}; }

    friend bool operator==(const Packed&, const Packed&) = default;
};

inline bool is_prefix(Packed a, Packed b) noexcept {
    return a.len <= b.len && (b.len == 0 || (b.bits >> (b.len - a.len)) == a.bits);
}

inline Packed pack(const BitString& b) {
    return {b.to_uint(), static_cast<std::uint32_t>(b.size())};
}

inline BitString unpack(Packed p) {
    return BitString::from_uint(p.bits, p.len);
}

/// Set of (slot, packed string) pairs for strings up to `max_len` bits: a
/// bitmap when it fits in 2^22 entries, a hash set otherwise.
class PackedSet {
public:
    explicit PackedSet(std::uint32_t max_len, std::size_t slots = 1) : shift_(max_len + 1) {
        if (max_len <= 20 && (std::uint64_t{slots} << shift_) <= (std::uint64_t{1} << 22))
            dense_.assign(slots << shift_, 0);
    }
    bool insert(std::size_t slot, Packed p) {
        const std::uint64_t k = index(slot, p);
        if (!dense_.empty()) {
            auto& cell = dense_[k];
            if (cell)
                return false;
            cell = 1;
            return true;
        }
        return sparse_.insert(k).second;
    }
    bool contains(std::size_t slot, Packed p) const {
        const std::uint64_t k = index(slot, p);
        if (!dense_.empty())
            return dense_[k] != 0;
        return sparse_.count(k) != 0;
    }
    void clear() {
        std::fill(dense_.begin(), dense_.end(), 0);
        sparse_.clear();
    }

private:
    std::uint64_t index(std::size_t slot, Packed p) const { return (std::uint64_t{slot} << shift_) | p.key(); }

    std::uint32_t shift_;
    std::vector<char> dense_;
    std::unordered_set<std::uint64_t> sparse_;
};

/// Code tables and transitions flattened into arrays indexed by table * sigma + symbol.
class CompiledTuple {
public:
    explicit CompiledTuple(const CodeTuple& tuple) : m_(tuple.size()), sigma_(tuple.sigma()) {
        lmax_ = static_cast<std::uint32_t>(tuple.max_codeword_length());
        if (lmax_ > max_packed_length)
            throw Error(Errc::LimitExceeded, "codewords longer than " + std::to_string(max_packed_length) +
                                                 " bits are not supported by the analyser");
        code_.reserve(m_ * sigma_);
        next_.reserve(m_ * sigma_);
        for (TableIndex i = 0; i < m_; ++i) {
            for (SymbolIndex s = 0; s < sigma_; ++s) {
                code_.push_back(pack(tuple.code(i, s)));
                next_.push_back(static_cast<std::uint32_t>(tuple.next(i, s)));
            }
        }
    }

    std::size_t size() const noexcept { return m_; }
    std::size_t sigma() const noexcept { return sigma_; }
    std::uint32_t lmax() const noexcept { return lmax_; }
    Packed code(std::size_t i, std::size_t s) const noexcept { return code_[i * sigma_ + s]; }
    std::uint32_t next(std::size_t i, std::size_t s) const noexcept { return next_[i * sigma_ + s]; }

private:
    std::size_t m_;
    std::size_t sigma_;
    std::uint32_t lmax_ = 0;
    std::vector<Packed> code_;
    std::vector<std::uint32_t> next_;
};

} // namespace codetuple::detail
