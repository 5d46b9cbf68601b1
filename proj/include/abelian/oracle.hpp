#pragma once

// Brute-force ground truth: every length-n window of the covering prefix, with an incrementally
// maintained Parikh vector.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "abelian/parry.hpp"
#include "abelian/word.hpp"

namespace abelian {

/// { Ψ(w) − Ψ(text_[n]) : w a length-n window of text }. `text` must start with the prefix
/// the relative vectors are taken against.
RelativeParikhSet window_rel_parikh_set(std::span<const Letter> text, std::size_t n, std::size_t alphabet_size);

/// Holds a fixed-point prefix long enough to cover every n <= n_max. Queries are const and may run
/// concurrently.
class Oracle {
public:
    Oracle(const ParrySubstitution& phi, std::size_t n_max, std::size_t cap = kDefaultLetterCap);

    const ParrySubstitution& substitution() const noexcept { return phi_; }
    std::size_t n_max() const noexcept { return n_max_; }
    const Word& prefix() const noexcept { return prefix_; }

    /// B(n), the length of the covering prefix scanned for n.
    std::size_t covering_length(std::size_t n) const;

    RelativeParikhSet rel_parikh_set(std::size_t n) const;
    std::size_t ac(std::size_t n) const { return rel_parikh_set(n).size(); }

private:
    ParrySubstitution phi_;
    std::size_t n_max_;
    Word prefix_;
};

RelativeParikhSet brute_rel_parikh_set(std::size_t n, const ParrySubstitution& phi, std::size_t cap = kDefaultLetterCap);
std::size_t brute_ac(std::size_t n, const ParrySubstitution& phi, std::size_t cap = kDefaultLetterCap);

/// Per-letter maximum of |ψ'_ℓ| over every relative Parikh vector for 1 <= n <= n_max.
struct BalanceProfile {
    std::vector<std::uint64_t> max_imbalance;
    std::size_t n_max = 0;

    /// Largest entry: the smallest c for which the scanned range is c-balanced.
    std::uint64_t c() const noexcept;
    void merge(const BalanceProfile& other);

    friend bool operator==(const BalanceProfile&, const BalanceProfile&) = default;
};

BalanceProfile balance_profile(const ParrySubstitution& phi, std::size_t n_max, std::size_t cap = kDefaultLetterCap);

/// Folds one relative Parikh set into a profile.
void accumulate_balance(BalanceProfile& profile, const RelativeParikhSet& set);

} // namespace abelian
