#pragma once

// Finite words over {0, ..., A-1}, Parikh vectors and relative Parikh vectors.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abelian {

using Letter = std::uint8_t;

inline constexpr std::size_t kMaxAlphabet = 256;

/// Immutable finite word. Every operation returns a new value.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {}

    /// Parses "0102010" (one digit per letter) or "10,2,11" (comma-separated letters).
    static Word parse(std::string_view text);

    /// The word ℓ^count.
    static Word power(Letter letter, std::size_t count) {
        return Word(std::vector<Letter>(count, letter));
    }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    Word prefix(std::size_t length) const;
    Word slice(std::size_t pos, std::size_t length) const;
    bool starts_with(const Word& other) const noexcept;
    bool ends_with(const Word& other) const noexcept;

    /// Digits concatenated when every letter is below 10, comma-separated otherwise.
    std::string to_string() const;

    friend Word operator+(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Canonical rendering relative to an alphabet size: digits for A <= 10, comma-separated otherwise.
std::string render(const Word& w, std::size_t alphabet_size);

/// x^{-1} v. Throws WordError when x is not a prefix of v.
Word left_cancel(const Word& x, const Word& v);
/// v x^{-1}. Throws WordError when x is not a suffix of v.
Word right_cancel(const Word& v, const Word& x);

/// Distinct contiguous factors of length n; {ε} for n = 0, empty when n > |w|.
std::set<Word> factors_of_length(const Word& w, std::size_t n);

class ParikhVector {
public:
    ParikhVector() = default;
    explicit ParikhVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

    std::size_t size() const noexcept { return counts_.size(); }
    std::uint64_t operator[](std::size_t i) const { return counts_[i]; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }
    std::uint64_t total() const noexcept;

    friend ParikhVector operator+(const ParikhVector& a, const ParikhVector& b);
    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
    friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;

private:
    std::vector<std::uint64_t> counts_;
};

class RelativeParikhVector {
public:
    RelativeParikhVector() = default;
    explicit RelativeParikhVector(std::vector<std::int64_t> deltas) : deltas_(std::move(deltas)) {}

    std::size_t size() const noexcept { return deltas_.size(); }
    std::int64_t operator[](std::size_t i) const { return deltas_[i]; }
    std::span<const std::int64_t> deltas() const noexcept { return deltas_; }
    std::int64_t sum() const noexcept;
    bool is_zero() const noexcept;

    /// "(-1,1,0)"
    std::string to_string() const;

    friend RelativeParikhVector operator-(const ParikhVector& a, const ParikhVector& b);
    friend bool operator==(const RelativeParikhVector&, const RelativeParikhVector&) = default;
    friend auto operator<=>(const RelativeParikhVector&, const RelativeParikhVector&) = default;

private:
    std::vector<std::int64_t> deltas_;
};

RelativeParikhVector operator-(const ParikhVector& a, const ParikhVector& b);

using RelativeParikhSet = std::set<RelativeParikhVector>;

/// Ψ(w) over an alphabet of the given size. Throws WordError on an out-of-range letter.
ParikhVector parikh(const Word& w, std::size_t alphabet_size);
ParikhVector parikh(std::span<const Letter> w, std::size_t alphabet_size);

/// Ψ(w) − Ψ(reference). Throws WordError when the lengths differ.
RelativeParikhVector relative_parikh(const Word& w, const Word& reference, std::size_t alphabet_size);

} // namespace abelian
