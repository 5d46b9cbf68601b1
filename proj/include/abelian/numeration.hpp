#pragma once

// Normal F-representations ⟨n⟩_F in the base F_k = |φ^k(0)|, and the prefix u_[n] they describe.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "abelian/parry.hpp"
#include "abelian/word.hpp"

namespace abelian {

/// Digit sequence (d_N, ..., d_0), most significant first. Leading zeros are allowed on
/// construction; comparison and rendering use the canonical form without them.
class FDigits {
public:
    FDigits() = default;
    explicit FDigits(std::vector<unsigned> digits) : digits_(std::move(digits)) {}
    FDigits(std::initializer_list<unsigned> digits) : digits_(digits) {}

    /// "1,0,1" or "(1,0,1)"; "" and "()" give the empty sequence.
    static FDigits parse(std::string_view text);

    /// (block^repetitions, tail), e.g. ((1,0,0,0)^i, 1).
    static FDigits pattern(std::span<const unsigned> block, std::size_t repetitions, std::span<const unsigned> tail);

    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    unsigned operator[](std::size_t i) const { return digits_[i]; }
    std::span<const unsigned> digits() const noexcept { return digits_; }

    /// Leading zeros stripped.
    FDigits normalized() const;

    /// "(1,0,1)"
    std::string to_string() const;

    /// Canonical forms compared by length first, then lexicographically.
    friend bool operator==(const FDigits& a, const FDigits& b);
    friend std::strong_ordering operator<=>(const FDigits& a, const FDigits& b);

private:
    std::vector<unsigned> digits_;
};

/// Greedy expansion with minimal N (F_N <= n < F_{N+1}); empty for n = 0.
FDigits to_normal_frep(const BigInt& n, const ParrySubstitution& phi);

/// Σ d_i F_i. Throws InvalidRepresentation when a digit exceeds α_0.
BigInt frep_value(const FDigits& digits, const ParrySubstitution& phi);

/// (φ^N(0))^{d_N} ... (φ(0))^{d_1} 0^{d_0}. Throws ResourceError beyond `cap` letters.
Word prefix_from_frep(const FDigits& digits, const ParrySubstitution& phi, std::size_t cap = kDefaultLetterCap);

/// Throws InvalidRepresentation unless every digit is <= α_0.
void check_digits(const FDigits& digits, const ParrySubstitution& phi);

/// True when `digits` is exactly what the greedy algorithm produces for its own value.
bool is_normal_frep(const FDigits& digits, const ParrySubstitution& phi);

} // namespace abelian
