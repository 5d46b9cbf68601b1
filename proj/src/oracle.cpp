#include "abelian/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "abelian/codecomp.hpp"
#include "abelian/error.hpp"

namespace abelian {

RelativeParikhSet window_rel_parikh_set(std::span<const Letter> text, std::size_t n, std::size_t alphabet_size) {
    if (n > text.size()) throw WordError("window longer than the scanned text");
    // delta = Ψ(window) − Ψ(text_[n]); the first window is text_[n] itself.
    std::vector<std::int64_t> delta(alphabet_size, 0);
    std::set<std::vector<std::int64_t>> seen{delta};
    for (std::size_t start = 1; n > 0 && start + n <= text.size(); ++start) {
        --delta[text[start - 1]];
        ++delta[text[start + n - 1]];
        if (!seen.contains(delta)) seen.insert(delta);
    }
    RelativeParikhSet out;
    for (const auto& v : seen) out.emplace(v);
    return out;
}

Oracle::Oracle(const ParrySubstitution& phi, std::size_t n_max, std::size_t cap) : phi_(phi), n_max_(n_max) {
    const BigInt length = abelian::covering_length(BigInt(n_max), phi);
    if (length > cap) {
        throw ResourceError("oracle for n <= " + std::to_string(n_max) + " needs " + length.str() +
                            " letters, cap is " + std::to_string(cap));
    }
    prefix_ = fixed_point_prefix(phi, length.convert_to<std::size_t>(), cap);
}

std::size_t Oracle::covering_length(std::size_t n) const {
    return abelian::covering_length(BigInt(n), phi_).convert_to<std::size_t>();
}

RelativeParikhSet Oracle::rel_parikh_set(std::size_t n) const {
    if (n > n_max_) throw std::out_of_range("n exceeds the oracle's prepared range");
    // φ^{k+R}(0) u_[n] is itself a prefix of u, so the shared prefix serves every n.
    return window_rel_parikh_set(prefix_.letters().first(covering_length(n)), n, phi_.alphabet_size());
}

RelativeParikhSet brute_rel_parikh_set(std::size_t n, const ParrySubstitution& phi, std::size_t cap) {
    return Oracle(phi, n, cap).rel_parikh_set(n);
}

std::size_t brute_ac(std::size_t n, const ParrySubstitution& phi, std::size_t cap) {
    return brute_rel_parikh_set(n, phi, cap).size();
}

std::uint64_t BalanceProfile::c() const noexcept {
    return max_imbalance.empty() ? 0 : *std::max_element(max_imbalance.begin(), max_imbalance.end());
}

void BalanceProfile::merge(const BalanceProfile& other) {
    if (max_imbalance.size() < other.max_imbalance.size()) max_imbalance.resize(other.max_imbalance.size(), 0);
    for (std::size_t l = 0; l < other.max_imbalance.size(); ++l) {
        max_imbalance[l] = std::max(max_imbalance[l], other.max_imbalance[l]);
    }
    n_max = std::max(n_max, other.n_max);
}

void accumulate_balance(BalanceProfile& profile, const RelativeParikhSet& set) {
    for (const auto& v : set) {
        if (profile.max_imbalance.size() < v.size()) profile.max_imbalance.resize(v.size(), 0);
        for (std::size_t l = 0; l < v.size(); ++l) {
            profile.max_imbalance[l] = std::max<std::uint64_t>(profile.max_imbalance[l], std::llabs(v[l]));
        }
    }
}

BalanceProfile balance_profile(const ParrySubstitution& phi, std::size_t n_max, std::size_t cap) {
    Oracle oracle(phi, n_max, cap);
    BalanceProfile profile;
    profile.max_imbalance.assign(phi.alphabet_size(), 0);
    profile.n_max = n_max;
    for (std::size_t n = 1; n <= n_max; ++n) accumulate_balance(profile, oracle.rel_parikh_set(n));
    return profile;
}

} // namespace abelian
