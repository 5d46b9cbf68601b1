#pragma once

// Parry substitutions of the simple form
//     0 -> 0^a0 1, 1 -> 0^a1 2, ..., m-1 -> 0^a(m-1)
// and the non-simple form
//     0 -> 0^a0 1, ..., m+p-2 -> 0^a(m+p-2) (m+p-1), m+p-1 -> 0^a(m+p-1) m.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "abelian/word.hpp"

namespace abelian {

using BigInt = boost::multiprecision::cpp_int;

/// Default cap on the number of letters any call may materialize.
inline constexpr std::size_t kDefaultLetterCap = 100'000'000;

enum class ParryKind { simple, non_simple };

class ParrySubstitution {
public:
    /// Builds the images from the templates and enforces a0 >= 1, al <= a0, and (non-simple)
    /// some al >= 1 on the cycle {m, ..., m+p-1}. Also rejects empty images, which would not be
    /// a substitution at all. Throws InvalidSubstitution.
    static ParrySubstitution validate(ParryKind kind, unsigned m, unsigned p, std::vector<unsigned> exponents);
    static ParrySubstitution simple(unsigned m, std::vector<unsigned> exponents) {
        return validate(ParryKind::simple, m, 0, std::move(exponents));
    }
    static ParrySubstitution non_simple(unsigned m, unsigned p, std::vector<unsigned> exponents) {
        return validate(ParryKind::non_simple, m, p, std::move(exponents));
    }

    /// Raw rules "0->01;1->02;2->0", matched against the two templates.
    static ParrySubstitution from_rules(std::string_view rules);

    /// "simple m=3 alpha=1,1,1", "nonsimple m=1 p=2 alpha=2,0,1", or raw rules.
    static ParrySubstitution parse(std::string_view spec);

    ParryKind kind() const noexcept { return kind_; }
    unsigned m() const noexcept { return m_; }
    /// Cycle length; 0 for simple substitutions.
    unsigned p() const noexcept { return p_; }
    std::size_t alphabet_size() const noexcept { return exponents_.size(); }
    std::span<const unsigned> exponents() const noexcept { return exponents_; }
    unsigned alpha(std::size_t letter) const { return exponents_.at(letter); }
    unsigned alpha0() const noexcept { return exponents_.front(); }
    const Word& image(Letter letter) const;
    /// The letter written after 0^al in the image of l, or -1 when the image is all zeros.
    int successor(Letter letter) const noexcept { return successors_[letter]; }

    /// Canonical text form accepted by parse().
    std::string describe() const;
    /// "0->01;1->02;2->0"
    std::string rules() const;

    friend bool operator==(const ParrySubstitution& a, const ParrySubstitution& b) {
        return a.kind_ == b.kind_ && a.m_ == b.m_ && a.p_ == b.p_ && a.exponents_ == b.exponents_;
    }

private:
    ParrySubstitution() = default;

    ParryKind kind_ = ParryKind::simple;
    unsigned m_ = 0;
    unsigned p_ = 0;
    std::vector<unsigned> exponents_;
    std::vector<int> successors_;
    std::vector<Word> images_;
};

/// φ(w). Throws WordError on a letter outside the alphabet.
Word apply_morphism(const ParrySubstitution& phi, const Word& w);
Word apply_morphism(const ParrySubstitution& phi, std::span<const Letter> w);

/// φ^k(w). Throws ResourceError when the result would exceed `cap` letters.
Word apply_power(const ParrySubstitution& phi, unsigned k, const Word& w, std::size_t cap = kDefaultLetterCap);

/// Exact |φ^k(w)| without materializing anything.
BigInt power_length(const ParrySubstitution& phi, unsigned k, const Word& w);

/// Number of leading zeros of φ(w), counted up to `limit` (the scan stops once it is reached).
std::size_t image_leading_zeros(const ParrySubstitution& phi, std::span<const Letter> w, std::size_t limit);

/// Per-letter lengths |φ^j(l)| advanced one level at a time.
class LengthRecurrence {
public:
    explicit LengthRecurrence(const ParrySubstitution& phi);

    unsigned level() const noexcept { return level_; }
    const BigInt& length(std::size_t letter) const { return lengths_.at(letter); }
    void advance();

private:
    const ParrySubstitution* phi_;
    unsigned level_ = 0;
    std::vector<BigInt> lengths_;
};

/// F_0, F_1, ..., F_K with F_k = |φ^k(0)|.
struct LengthTable {
    std::vector<BigInt> values;

    std::size_t size() const noexcept { return values.size(); }
    const BigInt& operator[](std::size_t k) const { return values.at(k); }
};

LengthTable block_lengths(const ParrySubstitution& phi, std::size_t K);

/// First `length` letters of the fixed point u = lim φ^k(0).
Word fixed_point_prefix(const ParrySubstitution& phi, std::size_t length, std::size_t cap = kDefaultLetterCap);

} // namespace abelian
