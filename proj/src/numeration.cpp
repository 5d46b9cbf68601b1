#include "abelian/numeration.hpp"

#include <algorithm>
#include <charconv>

#include "abelian/error.hpp"

namespace abelian {

FDigits FDigits::parse(std::string_view text) {
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') throw InvalidRepresentation("unbalanced parentheses in '" + std::string(text) + "'");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<unsigned> out;
    if (text.empty()) return FDigits(std::move(out));
    std::size_t start = 0;
    while (start <= text.size()) {
        auto stop = text.find(',', start);
        if (stop == std::string_view::npos) stop = text.size();
        auto token = text.substr(start, stop - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw InvalidRepresentation("invalid digit '" + std::string(token) + "'");
        }
        out.push_back(value);
        start = stop + 1;
    }
    return FDigits(std::move(out));
}

FDigits FDigits::pattern(std::span<const unsigned> block, std::size_t repetitions, std::span<const unsigned> tail) {
    std::vector<unsigned> out;
    out.reserve(block.size() * repetitions + tail.size());
    for (std::size_t i = 0; i < repetitions; ++i) out.insert(out.end(), block.begin(), block.end());
    out.insert(out.end(), tail.begin(), tail.end());
    return FDigits(std::move(out));
}

FDigits FDigits::normalized() const {
    auto first = std::find_if(digits_.begin(), digits_.end(), [](unsigned d) { return d != 0; });
    return FDigits(std::vector<unsigned>(first, digits_.end()));
}

std::string FDigits::to_string() const {
    std::string out = "(";
    auto canon = normalized();
    for (std::size_t i = 0; i < canon.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(canon[i]);
    }
    out.push_back(')');
    return out;
}

bool operator==(const FDigits& a, const FDigits& b) {
    return a.normalized().digits_ == b.normalized().digits_;
}

std::strong_ordering operator<=>(const FDigits& a, const FDigits& b) {
    auto ca = a.normalized();
    auto cb = b.normalized();
    if (auto c = ca.size() <=> cb.size(); c != 0) return c;
    return ca.digits_ <=> cb.digits_;
}

void check_digits(const FDigits& digits, const ParrySubstitution& phi) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] > phi.alpha0()) {
            throw InvalidRepresentation("digit " + std::to_string(digits[i]) + " exceeds alpha_0 = " +
                                        std::to_string(phi.alpha0()));
        }
    }
}

FDigits to_normal_frep(const BigInt& n, const ParrySubstitution& phi) {
    if (n < 0) throw InvalidRepresentation("negative integer has no F-representation");
    if (n == 0) return {};
    std::vector<BigInt> lengths;
    LengthRecurrence rec(phi);
    lengths.push_back(rec.length(0));
    while (lengths.back() <= n) {
        rec.advance();
        lengths.push_back(rec.length(0));
    }
    // lengths.back() = F_{N+1} > n >= F_N
    std::vector<unsigned> digits;
    BigInt rest = n;
    for (std::size_t i = lengths.size() - 1; i-- > 0;) {
        BigInt d = rest / lengths[i];
        rest -= d * lengths[i];
        digits.push_back(d.convert_to<unsigned>());
    }
    return FDigits(std::move(digits));
}

BigInt frep_value(const FDigits& digits, const ParrySubstitution& phi) {
    check_digits(digits, phi);
    auto table = block_lengths(phi, digits.size());
    BigInt value = 0;
    const std::size_t N = digits.size();
    for (std::size_t i = 0; i < N; ++i) value += table[N - 1 - i] * digits[i];
    return value;
}

Word prefix_from_frep(const FDigits& digits, const ParrySubstitution& phi, std::size_t cap) {
    BigInt total = frep_value(digits, phi);
    if (total > cap) {
        throw ResourceError("prefix of length " + total.str() + " exceeds the cap of " + std::to_string(cap) +
                            " letters");
    }
    // Padding zeros would only force materializing unused powers.
    const FDigits canon = digits.normalized();
    const std::size_t N = canon.size();
    std::vector<Letter> out;
    out.reserve(total.convert_to<std::size_t>());
    std::vector<Word> powers{Word{Letter{0}}};
    for (std::size_t i = 1; i < N; ++i) powers.push_back(apply_morphism(phi, powers.back()));
    for (std::size_t i = 0; i < N; ++i) {
        const Word& block = powers[N - 1 - i];
        for (unsigned r = 0; r < canon[i]; ++r) out.insert(out.end(), block.begin(), block.end());
    }
    return Word(std::move(out));
}

bool is_normal_frep(const FDigits& digits, const ParrySubstitution& phi) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] > phi.alpha0()) return false;
    }
    auto canon = digits.normalized();
    if (canon.size() != digits.size()) return false;
    auto greedy = to_normal_frep(frep_value(digits, phi), phi);
    return std::equal(greedy.digits().begin(), greedy.digits().end(), canon.digits().begin(), canon.digits().end());
}

} // namespace abelian
