#pragma once

// Abelian co-decomposition of Parry words: the covering prefix u_[B(n)], Z-sets built digit by
// digit from ⟨n⟩_F, relative Parikh sets, AC(n) and detection of Z-set stabilization along a
// periodic digit pattern.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abelian/numeration.hpp"
#include "abelian/parry.hpp"
#include "abelian/word.hpp"

namespace abelian {

/// Aligned blocks (z, z̃) with Ψ(z) = Ψ(z̃).
struct BlockPair {
    Word z;
    Word z_tilde;

    friend bool operator==(const BlockPair&, const BlockPair&) = default;
    friend auto operator<=>(const BlockPair&, const BlockPair&) = default;
};

/// v = z_0 ... z_h, w = z̃_0 ... z̃_h.
class CoDecomposition {
public:
    CoDecomposition() = default;
    explicit CoDecomposition(std::vector<BlockPair> ordered) : ordered_(std::move(ordered)) {}

    const std::vector<BlockPair>& ordered_pairs() const noexcept { return ordered_; }
    std::size_t block_count() const noexcept { return ordered_.size(); }
    /// Deduplicated and sorted by (z, z̃).
    std::vector<BlockPair> canonical_set() const;
    Word top() const;
    Word bottom() const;

private:
    std::vector<BlockPair> ordered_;
};

/// Predicate on a candidate z̃ block.
using Admissible = std::function<bool(std::span<const Letter>)>;

/// "φ(z̃) begins with 0^{α_0}".
Admissible zero_prefix_admissible(const ParrySubstitution& phi);

/// Finest co-decomposition by greedy earliest cut. A cut at position p is taken when the running
/// Parikh vectors of both rows agree and both w[start, p) and w[p, end) are admissible; an empty
/// predicate admits everything. When no cut qualifies the whole pair is a single block.
/// Throws WordError when Ψ(v) != Ψ(w).
CoDecomposition co_decompose(const Word& v, const Word& w, std::size_t alphabet_size,
                             const Admissible& admissible = {});

/// Canonical (deduplicated, sorted) set of block pairs, tagged with the digits it was built for.
class ZSet {
public:
    ZSet() = default;
    ZSet(std::vector<BlockPair> pairs, FDigits provenance);

    const std::vector<BlockPair>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    const FDigits& provenance() const noexcept { return provenance_; }
    bool contains(const BlockPair& pair) const;

    /// One "z | z~" line per pair.
    std::string render(std::size_t alphabet_size) const;

    /// Set equality; provenance is ignored.
    friend bool operator==(const ZSet& a, const ZSet& b) { return a.pairs_ == b.pairs_; }

private:
    std::vector<BlockPair> pairs_;
    FDigits provenance_;
};

/// R with φ^R(0)0 a prefix of u containing every factor 0t0 (t free of 0).
/// Simple: m-1 if α_0 >= 2, else m+ℓ'-1 with ℓ' = min{ℓ >= 1 : α_ℓ >= 1}.
/// Non-simple: h'+p if α_0 >= 2, else h'+m+p-1 with h' = min{ℓ >= m : α_ℓ >= 1}.
unsigned compute_R(const ParrySubstitution& phi);

/// Minimal k with n <= F_k.
unsigned covering_exponent(const BigInt& n, const ParrySubstitution& phi);

/// B(n) = F_{k+R} + n.
BigInt covering_length(const BigInt& n, const ParrySubstitution& phi);

/// u_[B(n)] = φ^{k+R}(0) u_[n]. Throws ResourceError beyond `cap` letters.
Word covering_prefix(const BigInt& n, const ParrySubstitution& phi, std::size_t cap = kDefaultLetterCap);

/// Z for the one-digit number d: Dec(φ^{1+R}(0) / 0^{-d} φ^{1+R}(0) 0^d).
ZSet z_base(unsigned d, const ParrySubstitution& phi);

/// Appends digit d: ∪ Dec(φ(z) / 0^{-d} φ(z̃) 0^d). Throws InapplicableStep when some φ(z̃)
/// does not begin with 0^d.
ZSet z_step(const ZSet& previous, unsigned d, const ParrySubstitution& phi);

/// Appends the digits of q in one stroke: ∪ Dec(φ^k(z) / u_[q]^{-1} φ^k(z̃) u_[q]) with k = |q|.
/// Throws InapplicableStep when some φ^k(z̃) does not begin with u_[q].
ZSet z_stroke(const ZSet& previous, const FDigits& q, const ParrySubstitution& phi,
              std::size_t cap = kDefaultLetterCap);

/// Z for a digit sequence (leading zeros ignored). Throws InvalidRepresentation for n = 0 or a
/// digit above α_0, InapplicableStep when the recursion breaks.
ZSet z_set(const FDigits& digits, const ParrySubstitution& phi);
ZSet z_set(const BigInt& n, const ParrySubstitution& phi);

/// ∪ over pairs of { Ψ(s) − Ψ(r) : r prefix of z, s prefix of z̃, |r| = |s| }, empty prefixes included.
RelativeParikhSet rel_parikh_set(const ZSet& z, std::size_t alphabet_size);

enum class Method { codec, oracle, both };

std::string to_string(Method method);
Method parse_method(std::string_view text);

struct AcResult {
    std::size_t value = 0;
    Method method = Method::codec;
    std::optional<std::size_t> codec_value;
    std::optional<std::size_t> oracle_value;
    /// The codec recursion was inapplicable and the oracle answered instead.
    bool fallback = false;
};

/// AC(n) by the requested route. `both` throws VerificationMismatch on disagreement.
AcResult abelian_complexity(const FDigits& digits, const ParrySubstitution& phi, Method method,
                            std::size_t cap = kDefaultLetterCap);
AcResult abelian_complexity(const BigInt& n, const ParrySubstitution& phi, Method method,
                            std::size_t cap = kDefaultLetterCap);

struct StabilizationReport {
    std::vector<unsigned> block;
    std::vector<unsigned> tail;
    /// First i with Z(block^i) = Z(block^{i+1}); empty when not reached within i_max.
    std::optional<std::size_t> stabilized_at;
    std::optional<std::size_t> stable_ac;
    RelativeParikhSet stable_rel_set;
    /// Some step was inapplicable; values came from the oracle and prove nothing about i -> ∞.
    bool oracle_only = false;

    struct Sample {
        std::size_t i = 0;
        BigInt n;
        std::optional<std::size_t> ac;
    };
    /// AC((block^i, tail)) for the i that were examined.
    std::vector<Sample> trace;

    /// Holds only for a genuine Z-set fixed point with every step verified.
    bool infinite_attainment() const noexcept { return stabilized_at.has_value() && !oracle_only; }
};

/// Iterates the Z recursion over copies of `block` until two consecutive Z-sets agree, then
/// appends `tail`. Throws InvalidRepresentation when (block^i, tail) is not a normal
/// F-representation for some examined i.
StabilizationReport detect_stabilization(std::span<const unsigned> block, std::span<const unsigned> tail,
                                         std::size_t i_max, const ParrySubstitution& phi,
                                         std::size_t cap = kDefaultLetterCap);

} // namespace abelian
