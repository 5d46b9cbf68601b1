#include "abelian/codecomp.hpp"

#include <algorithm>

#include "abelian/error.hpp"
#include "abelian/oracle.hpp"

namespace abelian {

std::vector<BlockPair> CoDecomposition::canonical_set() const {
    std::vector<BlockPair> out = ordered_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Word CoDecomposition::top() const {
    std::vector<Letter> out;
    for (const auto& pair : ordered_) out.insert(out.end(), pair.z.begin(), pair.z.end());
    return Word(std::move(out));
}

Word CoDecomposition::bottom() const {
    std::vector<Letter> out;
    for (const auto& pair : ordered_) out.insert(out.end(), pair.z_tilde.begin(), pair.z_tilde.end());
    return Word(std::move(out));
}

Admissible zero_prefix_admissible(const ParrySubstitution& phi) {
    const std::size_t need = phi.alpha0();
    return [&phi, need](std::span<const Letter> block) { return image_leading_zeros(phi, block, need) >= need; };
}

CoDecomposition co_decompose(const Word& v, const Word& w, std::size_t alphabet_size, const Admissible& admissible) {
    if (parikh(v, alphabet_size) != parikh(w, alphabet_size)) {
        throw WordError("co-decomposition needs equal Parikh vectors: " + v.to_string() + " / " + w.to_string());
    }
    const std::size_t n = v.size();
    auto top = v.letters();
    auto bottom = w.letters();
    std::vector<BlockPair> blocks;
    std::vector<std::int64_t> diff(alphabet_size, 0);
    std::size_t unbalanced = 0;
    auto bump = [&](Letter l, std::int64_t by) {
        bool was_zero = diff[l] == 0;
        diff[l] += by;
        if (was_zero && diff[l] != 0) ++unbalanced;
        if (!was_zero && diff[l] == 0) --unbalanced;
    };
    std::size_t start = 0;
    for (std::size_t p = 1; p < n; ++p) {
        bump(top[p - 1], +1);
        bump(bottom[p - 1], -1);
        if (unbalanced != 0) continue;
        if (admissible && !(admissible(bottom.subspan(start, p - start)) && admissible(bottom.subspan(p)))) continue;
        blocks.push_back({Word(top.subspan(start, p - start)), Word(bottom.subspan(start, p - start))});
        start = p;
    }
    if (n > 0) blocks.push_back({Word(top.subspan(start)), Word(bottom.subspan(start))});
    return CoDecomposition(std::move(blocks));
}

ZSet::ZSet(std::vector<BlockPair> pairs, FDigits provenance)
    : pairs_(std::move(pairs)), provenance_(std::move(provenance)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool ZSet::contains(const BlockPair& pair) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), pair);
}

std::string ZSet::render(std::size_t alphabet_size) const {
    std::string out;
    for (const auto& pair : pairs_) {
        out += abelian::render(pair.z, alphabet_size) + " | " + abelian::render(pair.z_tilde, alphabet_size) + "\n";
    }
    return out;
}

unsigned compute_R(const ParrySubstitution& phi) {
    const auto alpha = phi.exponents();
    const unsigned m = phi.m();
    if (phi.kind() == ParryKind::simple) {
        if (phi.alpha0() >= 2) return m - 1;
        for (unsigned l = 1; l < m; ++l) {
            if (alpha[l] >= 1) return m + l - 1;
        }
        throw InvalidSubstitution("alpha_0 = 1 and no alpha_l >= 1 for l >= 1: R is undefined");
    }
    unsigned h = m;
    while (h < alpha.size() && alpha[h] == 0) ++h;
    if (h == alpha.size()) throw InvalidSubstitution("no alpha_l >= 1 on the cycle: R is undefined");
    return phi.alpha0() >= 2 ? h + phi.p() : h + m + phi.p() - 1;
}

unsigned covering_exponent(const BigInt& n, const ParrySubstitution& phi) {
    LengthRecurrence rec(phi);
    while (n > rec.length(0)) rec.advance();
    return rec.level();
}

BigInt covering_length(const BigInt& n, const ParrySubstitution& phi) {
    const unsigned total = covering_exponent(n, phi) + compute_R(phi);
    LengthRecurrence rec(phi);
    while (rec.level() < total) rec.advance();
    return rec.length(0) + n;
}

Word covering_prefix(const BigInt& n, const ParrySubstitution& phi, std::size_t cap) {
    const BigInt length = covering_length(n, phi);
    if (length > cap) {
        throw ResourceError("covering prefix of length " + length.str() + " exceeds the cap of " +
                            std::to_string(cap) + " letters");
    }
    const unsigned k = covering_exponent(n, phi);
    Word block = apply_power(phi, k + compute_R(phi), Word{Letter{0}}, cap);
    // n <= F_k <= |block| and φ^j(0) is a prefix of u, so u_[n] is a prefix of block.
    return block + block.prefix(n.convert_to<std::size_t>());
}

namespace {

void check_digit(unsigned d, const ParrySubstitution& phi) {
    if (d > phi.alpha0()) {
        throw InvalidRepresentation("digit " + std::to_string(d) + " exceeds alpha_0 = " + std::to_string(phi.alpha0()));
    }
}

FDigits extend(const FDigits& digits, std::span<const unsigned> more) {
    std::vector<unsigned> out(digits.digits().begin(), digits.digits().end());
    out.insert(out.end(), more.begin(), more.end());
    return FDigits(std::move(out));
}

} // namespace

ZSet z_base(unsigned d, const ParrySubstitution& phi) {
    check_digit(d, phi);
    const Word top = apply_power(phi, 1 + compute_R(phi), Word{Letter{0}});
    const Word zeros = Word::power(0, d);
    const Word bottom = left_cancel(zeros, top) + zeros;
    auto dec = co_decompose(top, bottom, phi.alphabet_size(), zero_prefix_admissible(phi));
    return ZSet(dec.canonical_set(), FDigits{d});
}

ZSet z_step(const ZSet& previous, unsigned d, const ParrySubstitution& phi) {
    check_digit(d, phi);
    const Word zeros = Word::power(0, d);
    const auto admissible = zero_prefix_admissible(phi);
    std::vector<BlockPair> out;
    for (const auto& pair : previous.pairs()) {
        if (image_leading_zeros(phi, pair.z_tilde.letters(), d) < d) {
            throw InapplicableStep("phi(" + pair.z_tilde.to_string() + ") does not begin with 0^" + std::to_string(d));
        }
        const Word top = apply_morphism(phi, pair.z);
        const Word bottom = left_cancel(zeros, apply_morphism(phi, pair.z_tilde)) + zeros;
        auto dec = co_decompose(top, bottom, phi.alphabet_size(), admissible);
        out.insert(out.end(), dec.ordered_pairs().begin(), dec.ordered_pairs().end());
    }
    const unsigned appended[] = {d};
    return ZSet(std::move(out), extend(previous.provenance(), appended));
}

ZSet z_stroke(const ZSet& previous, const FDigits& q, const ParrySubstitution& phi, std::size_t cap) {
    check_digits(q, phi);
    const auto k = static_cast<unsigned>(q.size());
    const Word uq = prefix_from_frep(q, phi, cap);
    const auto admissible = zero_prefix_admissible(phi);
    std::vector<BlockPair> out;
    for (const auto& pair : previous.pairs()) {
        const Word image = apply_power(phi, k, pair.z_tilde, cap);
        if (!image.starts_with(uq)) {
            throw InapplicableStep("phi^" + std::to_string(k) + "(" + pair.z_tilde.to_string() +
                                   ") does not begin with " + uq.to_string());
        }
        const Word top = apply_power(phi, k, pair.z, cap);
        const Word bottom = left_cancel(uq, image) + uq;
        auto dec = co_decompose(top, bottom, phi.alphabet_size(), admissible);
        out.insert(out.end(), dec.ordered_pairs().begin(), dec.ordered_pairs().end());
    }
    return ZSet(std::move(out), extend(previous.provenance(), q.digits()));
}

ZSet z_set(const FDigits& digits, const ParrySubstitution& phi) {
    check_digits(digits, phi);
    const FDigits canon = digits.normalized();
    if (canon.empty()) throw InvalidRepresentation("n must be positive");
    ZSet z = z_base(canon[0], phi);
    for (std::size_t i = 1; i < canon.size(); ++i) z = z_step(z, canon[i], phi);
    return z;
}

ZSet z_set(const BigInt& n, const ParrySubstitution& phi) {
    return z_set(to_normal_frep(n, phi), phi);
}

RelativeParikhSet rel_parikh_set(const ZSet& z, std::size_t alphabet_size) {
    RelativeParikhSet out;
    std::vector<std::int64_t> diff(alphabet_size);
    for (const auto& pair : z.pairs()) {
        std::fill(diff.begin(), diff.end(), 0);
        out.emplace(diff);
        for (std::size_t j = 0; j < pair.z.size(); ++j) {
            ++diff[pair.z_tilde[j]];
            --diff[pair.z[j]];
            out.emplace(diff);
        }
    }
    return out;
}

std::string to_string(Method method) {
    switch (method) {
    case Method::codec: return "codec";
    case Method::oracle: return "oracle";
    case Method::both: return "both";
    }
    return "?";
}

Method parse_method(std::string_view text) {
    if (text == "codec") return Method::codec;
    if (text == "oracle") return Method::oracle;
    if (text == "both") return Method::both;
    throw Error("unknown method '" + std::string(text) + "' (expected codec, oracle or both)");
}

AcResult abelian_complexity(const FDigits& digits, const ParrySubstitution& phi, Method method, std::size_t cap) {
    check_digits(digits, phi);
    const FDigits canon = digits.normalized();
    if (canon.empty()) throw InvalidRepresentation("n must be positive");

    AcResult result;
    result.method = method;
    if (method != Method::oracle) {
        try {
            result.codec_value = rel_parikh_set(z_set(canon, phi), phi.alphabet_size()).size();
        } catch (const InapplicableStep&) {
            result.fallback = true;
        }
    }
    if (method != Method::codec || result.fallback) {
        const BigInt n = frep_value(canon, phi);
        const BigInt length = covering_length(n, phi);
        if (length > cap) {
            throw ResourceError("oracle needs a covering prefix of " + length.str() + " letters, cap is " +
                                std::to_string(cap));
        }
        result.oracle_value = brute_ac(n.convert_to<std::size_t>(), phi, cap);
    }
    if (result.codec_value && result.oracle_value && *result.codec_value != *result.oracle_value) {
        throw VerificationMismatch("AC(" + frep_value(canon, phi).str() + "): codec " +
                                   std::to_string(*result.codec_value) + " vs oracle " +
                                   std::to_string(*result.oracle_value));
    }
    result.value = result.codec_value ? *result.codec_value : *result.oracle_value;
    return result;
}

AcResult abelian_complexity(const BigInt& n, const ParrySubstitution& phi, Method method, std::size_t cap) {
    if (n < 1) throw InvalidRepresentation("n must be positive");
    return abelian_complexity(to_normal_frep(n, phi), phi, method, cap);
}

StabilizationReport detect_stabilization(std::span<const unsigned> block, std::span<const unsigned> tail,
                                         std::size_t i_max, const ParrySubstitution& phi, std::size_t cap) {
    if (block.empty() || block.front() == 0) {
        throw InvalidRepresentation("the repeated block must start with a nonzero digit");
    }
    if (i_max < 1) throw InvalidRepresentation("i_max must be at least 1");
    StabilizationReport report;
    report.block.assign(block.begin(), block.end());
    report.tail.assign(tail.begin(), tail.end());

    std::vector<BigInt> values;
    for (std::size_t i = 1; i <= i_max + 1; ++i) {
        const FDigits digits = FDigits::pattern(block, i, tail);
        check_digits(digits, phi);
        if (!is_normal_frep(digits, phi)) {
            throw InvalidRepresentation(digits.to_string() + " is not a normal F-representation");
        }
        values.push_back(frep_value(digits, phi));
    }

    auto append = [&phi](ZSet z, std::span<const unsigned> digits) {
        for (unsigned d : digits) z = z_step(z, d, phi);
        return z;
    };

    try {
        ZSet current = z_set(FDigits(std::vector<unsigned>(block.begin(), block.end())), phi);
        for (std::size_t i = 1; i <= i_max; ++i) {
            const ZSet with_tail = append(current, tail);
            const auto rel = rel_parikh_set(with_tail, phi.alphabet_size());
            report.trace.push_back({i, values[i - 1], rel.size()});
            const ZSet next = append(current, block);
            if (next == current) {
                report.stabilized_at = i;
                report.stable_ac = rel.size();
                report.stable_rel_set = rel;
                break;
            }
            current = next;
        }
    } catch (const InapplicableStep&) {
        report.oracle_only = true;
        report.stabilized_at.reset();
        report.stable_ac.reset();
        report.stable_rel_set.clear();
        report.trace.clear();
        for (std::size_t i = 1; i <= i_max; ++i) {
            StabilizationReport::Sample sample{i, values[i - 1], std::nullopt};
            if (covering_length(values[i - 1], phi) <= cap) {
                sample.ac = brute_ac(values[i - 1].convert_to<std::size_t>(), phi, cap);
            }
            report.trace.push_back(std::move(sample));
        }
    }
    return report;
}

} // namespace abelian
