#pragma once

// Range kernels over independent n. Each parallel (OpenMP) kernel has a serial twin that the
// tests use as the reference.

#include <cstddef>
#include <optional>
#include <vector>

#include "abelian/codecomp.hpp"
#include "abelian/oracle.hpp"
#include "abelian/parry.hpp"

namespace abelian {

/// Brute-force AC(n) for n in [first, last]; index 0 holds AC(first).
std::vector<std::size_t> oracle_ac_range_serial(const Oracle& oracle, std::size_t first, std::size_t last);
std::vector<std::size_t> oracle_ac_range_parallel(const Oracle& oracle, std::size_t first, std::size_t last);

struct CodecOutcome {
    std::optional<std::size_t> ac;  // empty when the recursion was inapplicable
    friend bool operator==(const CodecOutcome&, const CodecOutcome&) = default;
};

/// Co-decomposition AC(n) for n in [first, last], first >= 1.
std::vector<CodecOutcome> codec_ac_range_serial(const ParrySubstitution& phi, std::size_t first, std::size_t last);
std::vector<CodecOutcome> codec_ac_range_parallel(const ParrySubstitution& phi, std::size_t first, std::size_t last);

/// Parallel counterpart of balance_profile().
BalanceProfile balance_profile_parallel(const Oracle& oracle, std::size_t n_max);

struct VerifyRow {
    std::size_t n = 0;
    std::optional<std::size_t> codec;
    std::size_t oracle = 0;

    bool fallback() const noexcept { return !codec.has_value(); }
    bool agrees() const noexcept { return !codec || *codec == oracle; }
};

/// Codec against oracle for every n in [first, last].
std::vector<VerifyRow> verify_range(const ParrySubstitution& phi, std::size_t first, std::size_t last,
                                    std::size_t cap = kDefaultLetterCap, bool parallel = true);

} // namespace abelian
