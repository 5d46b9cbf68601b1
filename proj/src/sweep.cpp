#include "abelian/sweep.hpp"

#include <exception>
#include <stdexcept>

#include "abelian/error.hpp"

namespace abelian {

namespace {

void check_range(std::size_t first, std::size_t last) {
    if (first > last) throw std::invalid_argument("empty range");
}

CodecOutcome codec_one(const ParrySubstitution& phi, std::size_t n) {
    try {
        return {rel_parikh_set(z_set(BigInt(n), phi), phi.alphabet_size()).size()};
    } catch (const InapplicableStep&) {
        return {};
    }
}

// Runs body(i) for i in [0, count) across threads and rethrows the first exception afterwards.
template <typename Body>
void parallel_for(std::size_t count, Body body) {
    std::exception_ptr failure;
    const auto total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < total; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(abelian_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

} // namespace

std::vector<std::size_t> oracle_ac_range_serial(const Oracle& oracle, std::size_t first, std::size_t last) {
    check_range(first, last);
    std::vector<std::size_t> out(last - first + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = oracle.ac(first + i);
    return out;
}

std::vector<std::size_t> oracle_ac_range_parallel(const Oracle& oracle, std::size_t first, std::size_t last) {
    check_range(first, last);
    std::vector<std::size_t> out(last - first + 1);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = oracle.ac(first + i); });
    return out;
}

std::vector<CodecOutcome> codec_ac_range_serial(const ParrySubstitution& phi, std::size_t first, std::size_t last) {
    check_range(first, last);
    std::vector<CodecOutcome> out(last - first + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = codec_one(phi, first + i);
    return out;
}

std::vector<CodecOutcome> codec_ac_range_parallel(const ParrySubstitution& phi, std::size_t first, std::size_t last) {
    check_range(first, last);
    std::vector<CodecOutcome> out(last - first + 1);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = codec_one(phi, first + i); });
    return out;
}

BalanceProfile balance_profile_parallel(const Oracle& oracle, std::size_t n_max) {
    std::vector<BalanceProfile> partial(n_max);
    parallel_for(n_max, [&](std::size_t i) { accumulate_balance(partial[i], oracle.rel_parikh_set(i + 1)); });
    BalanceProfile profile;
    profile.max_imbalance.assign(oracle.substitution().alphabet_size(), 0);
    for (const auto& p : partial) profile.merge(p);
    profile.n_max = n_max;
    return profile;
}

std::vector<VerifyRow> verify_range(const ParrySubstitution& phi, std::size_t first, std::size_t last,
                                    std::size_t cap, bool parallel) {
    check_range(first, last);
    if (first == 0) throw std::invalid_argument("n must be positive");
    const Oracle oracle(phi, last, cap);
    auto oracle_values = parallel ? oracle_ac_range_parallel(oracle, first, last)
                                  : oracle_ac_range_serial(oracle, first, last);
    auto codec_values = parallel ? codec_ac_range_parallel(phi, first, last)
                                 : codec_ac_range_serial(phi, first, last);
    std::vector<VerifyRow> rows(oracle_values.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = {first + i, codec_values[i].ac, oracle_values[i]};
    return rows;
}

} // namespace abelian
