#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace codetuple {

/// Finite binary sequence. The first bit is the leftmost character of the
/// textual form, so "1011" starts with 1. The empty string plays the role of
/// the empty codeword.
///
/// Ordering is lexicographic with a proper prefix sorting first, which is
/// the same as comparing the textual forms.
class BitString {
public:
    BitString() = default;

    /// Parses text matching ^[01]*$; throws Errc::ParseError otherwise.
    static BitString parse(std::string_view text);

    /// The low `length` bits of `value`, most significant first.
    static BitString from_uint(std::uint64_t value, std::size_t length);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t pos) const noexcept { return bits_[pos] == '1'; }
    bool front() const noexcept { return bits_.front() == '1'; }

    void push_back(bool bit) { bits_.push_back(bit ? '1' : '0'); }
    BitString& operator+=(const BitString& other) {
        bits_ += other.bits_;
        return *this;
    }

    /// Bits [pos, pos + n), clamped to the end.
    BitString substr(std::size_t pos, std::size_t n = std::string::npos) const {
        BitString out;
        out.bits_ = bits_.substr(pos, n);
        return out;
    }

    /// Interprets the string as a big-endian unsigned integer. Requires size() <= 64.
    std::uint64_t to_uint() const noexcept;

    const std::string& str() const noexcept { return bits_; }

    friend auto operator<=>(const BitString&, const BitString&) = default;
    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::string bits_;
};

inline BitString operator+(BitString lhs, const BitString& rhs) {
    lhs += rhs;
    return lhs;
}

/// a ⪯ b: a is a prefix of b.
bool is_prefix(const BitString& a, const BitString& b) noexcept;

/// Either one is a prefix of the other.
inline bool comparable(const BitString& a, const BitString& b) noexcept {
    return is_prefix(a, b) || is_prefix(b, a);
}

/// Drops the first bit. Throws Errc::EmptyString on the empty string.
BitString suffix_drop_first(const BitString& a);

/// Longest common prefix.
BitString lcp(const BitString& a, const BitString& b);

/// Textual form, with the empty string shown as "λ".
std::string display(const BitString& b);

std::ostream& operator<<(std::ostream& os, const BitString& b);

} // namespace codetuple
