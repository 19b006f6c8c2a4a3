#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace adjoint {

/// A word over {x, y}, packed as a sentinel bit followed by one bit per letter
/// (x = 0, y = 1, first letter most significant). The numeric order of the
/// packed key is exactly degree-then-lexicographic order with x < y.
class Word {
public:
    static constexpr int kMaxDegree = 62;

    constexpr Word() noexcept = default;

    static constexpr Word from_key(std::uint64_t key) noexcept { return Word(key); }
    /// The index-th word of degree `degree` in lexicographic order.
    static constexpr Word from_index(int degree, std::uint64_t index) noexcept {
        return Word((std::uint64_t{1} << degree) | index);
    }
    static Word from_letters(std::string_view letters);
    static constexpr Word x() noexcept { return Word(0b10); }
    static constexpr Word y() noexcept { return Word(0b11); }

    constexpr std::uint64_t key() const noexcept { return key_; }
    constexpr int degree() const noexcept { return std::bit_width(key_) - 1; }
    /// Position of this word among the 2^degree words of its degree.
    constexpr std::uint64_t index() const noexcept {
        return key_ ^ (std::uint64_t{1} << degree());
    }
    constexpr bool empty() const noexcept { return key_ == 1; }
    /// Letter i (0-based from the left): 'x' or 'y'.
    char letter(int i) const noexcept {
        return (index() >> (degree() - 1 - i)) & 1U ? 'y' : 'x';
    }
    std::string letters() const;

    friend constexpr Word operator*(Word u, Word w) noexcept {
        return Word((u.key_ << w.degree()) | w.index());
    }
    friend constexpr auto operator<=>(Word, Word) = default;

private:
    constexpr explicit Word(std::uint64_t key) noexcept : key_(key) {}

    std::uint64_t key_ = 1;
};

} // namespace adjoint
