#include "abelian/parry.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "abelian/error.hpp"

namespace abelian {

namespace {

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

unsigned parse_unsigned(std::string_view text, std::string_view what) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidSubstitution("malformed " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<unsigned> parse_csv(std::string_view text) {
    std::vector<unsigned> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto stop = text.find(',', start);
        if (stop == std::string_view::npos) stop = text.size();
        out.push_back(parse_unsigned(trim(text.substr(start, stop - start)), "exponent"));
        start = stop + 1;
    }
    return out;
}

std::string join(std::span<const unsigned> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace

ParrySubstitution ParrySubstitution::validate(ParryKind kind, unsigned m, unsigned p, std::vector<unsigned> exponents) {
    if (m == 0) throw InvalidSubstitution("m must be positive");
    if (kind == ParryKind::non_simple && p == 0) throw InvalidSubstitution("p must be positive for a non-simple substitution");
    const std::size_t alphabet = kind == ParryKind::simple ? m : std::size_t{m} + p;
    if (alphabet > kMaxAlphabet) throw InvalidSubstitution("alphabet too large");
    if (exponents.size() != alphabet) {
        throw InvalidSubstitution("expected " + std::to_string(alphabet) + " exponents, got " +
                                  std::to_string(exponents.size()));
    }
    const unsigned a0 = exponents[0];
    if (a0 < 1) throw InvalidSubstitution("alpha_0 must be at least 1");
    for (std::size_t l = 1; l < alphabet; ++l) {
        if (exponents[l] > a0) {
            throw InvalidSubstitution("alpha_" + std::to_string(l) + " = " + std::to_string(exponents[l]) +
                                      " exceeds alpha_0 = " + std::to_string(a0));
        }
    }
    if (kind == ParryKind::non_simple) {
        bool any = false;
        for (std::size_t l = m; l < alphabet; ++l) any = any || exponents[l] >= 1;
        if (!any) throw InvalidSubstitution("some alpha_l on the cycle {m, ..., m+p-1} must be positive");
    } else {
        if (exponents[m - 1] == 0) {
            throw InvalidSubstitution("alpha_" + std::to_string(m - 1) + " = 0 gives the last letter an empty image");
        }
        if (m == 1 && a0 < 2) throw InvalidSubstitution("0 -> 0 is not a substitution");
    }

    ParrySubstitution phi;
    phi.kind_ = kind;
    phi.m_ = m;
    phi.p_ = kind == ParryKind::simple ? 0 : p;
    phi.exponents_ = std::move(exponents);
    phi.successors_.resize(alphabet);
    phi.images_.reserve(alphabet);
    for (std::size_t l = 0; l < alphabet; ++l) {
        int next = -1;
        if (l + 1 < alphabet) {
            next = static_cast<int>(l + 1);
        } else if (kind == ParryKind::non_simple) {
            next = static_cast<int>(m);
        }
        phi.successors_[l] = next;
        std::vector<Letter> img(phi.exponents_[l], Letter{0});
        if (next >= 0) img.push_back(static_cast<Letter>(next));
        phi.images_.emplace_back(std::move(img));
    }
    return phi;
}

ParrySubstitution ParrySubstitution::from_rules(std::string_view rules) {
    std::map<unsigned, Word> table;
    std::size_t start = 0;
    while (start < rules.size()) {
        auto stop = rules.find(';', start);
        if (stop == std::string_view::npos) stop = rules.size();
        auto rule = trim(rules.substr(start, stop - start));
        start = stop + 1;
        if (rule.empty()) continue;
        auto arrow = rule.find("->");
        if (arrow == std::string::npos) throw InvalidSubstitution("rule without '->': " + rule);
        unsigned letter = parse_unsigned(trim(std::string_view(rule).substr(0, arrow)), "letter");
        Word image;
        try {
            image = Word::parse(trim(std::string_view(rule).substr(arrow + 2)));
        } catch (const WordError& e) {
            throw InvalidSubstitution(std::string("bad image in rule '") + rule + "': " + e.what());
        }
        if (!table.emplace(letter, std::move(image)).second) {
            throw InvalidSubstitution("duplicate rule for letter " + std::to_string(letter));
        }
    }
    if (table.empty()) throw InvalidSubstitution("no rules given");
    const std::size_t alphabet = table.size();
    if (table.rbegin()->first != alphabet - 1) throw InvalidSubstitution("rules must cover letters 0..A-1 exactly");

    std::vector<unsigned> exponents(alphabet);
    int last_successor = -1;
    for (auto& [letter, image] : table) {
        std::size_t zeros = 0;
        while (zeros < image.size() && image[zeros] == 0) ++zeros;
        exponents[letter] = static_cast<unsigned>(zeros);
        const std::size_t rest = image.size() - zeros;
        if (letter + 1 < alphabet) {
            if (rest != 1 || image[zeros] != letter + 1) {
                throw InvalidSubstitution("image of " + std::to_string(letter) + " must be 0^a" +
                                          std::to_string(letter + 1));
            }
        } else if (rest == 1) {
            last_successor = image[zeros];
        } else if (rest != 0) {
            throw InvalidSubstitution("image of the last letter must be 0^a or 0^a m");
        }
    }
    if (last_successor < 0) {
        return validate(ParryKind::simple, static_cast<unsigned>(alphabet), 0, std::move(exponents));
    }
    if (static_cast<std::size_t>(last_successor) >= alphabet) {
        throw InvalidSubstitution("letter " + std::to_string(last_successor) + " outside the alphabet");
    }
    const auto m = static_cast<unsigned>(last_successor);
    return validate(ParryKind::non_simple, m, static_cast<unsigned>(alphabet) - m, std::move(exponents));
}

ParrySubstitution ParrySubstitution::parse(std::string_view spec) {
    if (spec.find("->") != std::string_view::npos) return from_rules(spec);

    std::istringstream in{std::string(spec)};
    std::string kind_token;
    in >> kind_token;
    ParryKind kind;
    if (kind_token == "simple") {
        kind = ParryKind::simple;
    } else if (kind_token == "nonsimple" || kind_token == "non-simple") {
        kind = ParryKind::non_simple;
    } else {
        throw InvalidSubstitution("substitution spec must start with 'simple', 'nonsimple' or be raw rules: '" +
                                  std::string(spec) + "'");
    }
    std::optional<unsigned> m, p;
    std::optional<std::vector<unsigned>> alpha;
    std::string token;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) throw InvalidSubstitution("expected key=value, got '" + token + "'");
        auto key = token.substr(0, eq);
        auto value = std::string_view(token).substr(eq + 1);
        if (key == "m") {
            m = parse_unsigned(value, "m");
        } else if (key == "p") {
            p = parse_unsigned(value, "p");
        } else if (key == "alpha") {
            alpha = parse_csv(value);
        } else {
            throw InvalidSubstitution("unknown key '" + key + "'");
        }
    }
    if (!m || !alpha) throw InvalidSubstitution("m and alpha are required");
    if (kind == ParryKind::non_simple && !p) throw InvalidSubstitution("p is required for a non-simple substitution");
    if (kind == ParryKind::simple && p) throw InvalidSubstitution("p is only meaningful for a non-simple substitution");
    return validate(kind, *m, p.value_or(0), std::move(*alpha));
}

const Word& ParrySubstitution::image(Letter letter) const {
    if (letter >= images_.size()) {
        throw WordError("letter " + std::to_string(letter) + " outside alphabet of size " +
                        std::to_string(images_.size()));
    }
    return images_[letter];
}

std::string ParrySubstitution::describe() const {
    if (kind_ == ParryKind::simple) return "simple m=" + std::to_string(m_) + " alpha=" + join(exponents_);
    return "nonsimple m=" + std::to_string(m_) + " p=" + std::to_string(p_) + " alpha=" + join(exponents_);
}

std::string ParrySubstitution::rules() const {
    std::string out;
    for (std::size_t l = 0; l < images_.size(); ++l) {
        if (l) out.push_back(';');
        out += std::to_string(l) + "->" + render(images_[l], images_.size());
    }
    return out;
}

Word apply_morphism(const ParrySubstitution& phi, std::span<const Letter> w) {
    std::size_t total = 0;
    for (Letter l : w) total += phi.image(l).size();
    std::vector<Letter> out;
    out.reserve(total);
    for (Letter l : w) {
        const Word& img = phi.image(l);
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out));
}

Word apply_morphism(const ParrySubstitution& phi, const Word& w) {
    return apply_morphism(phi, w.letters());
}

BigInt power_length(const ParrySubstitution& phi, unsigned k, const Word& w) {
    LengthRecurrence rec(phi);
    for (unsigned j = 0; j < k; ++j) rec.advance();
    BigInt total = 0;
    for (Letter l : w) {
        if (l >= phi.alphabet_size()) throw WordError("letter outside the alphabet");
        total += rec.length(l);
    }
    return total;
}

Word apply_power(const ParrySubstitution& phi, unsigned k, const Word& w, std::size_t cap) {
    if (power_length(phi, k, w) > cap) {
        throw ResourceError("phi^" + std::to_string(k) + " of a word of length " + std::to_string(w.size()) +
                            " exceeds the cap of " + std::to_string(cap) + " letters");
    }
    // Each pass is linear in its output and lengths grow geometrically, so the whole loop is
    // linear in the final length.
    Word current = w;
    for (unsigned j = 0; j < k; ++j) current = apply_morphism(phi, current);
    return current;
}

std::size_t image_leading_zeros(const ParrySubstitution& phi, std::span<const Letter> w, std::size_t limit) {
    std::size_t zeros = 0;
    for (Letter l : w) {
        zeros += phi.alpha(l);
        if (zeros >= limit) return limit;
        if (phi.successor(l) >= 0) return zeros;
    }
    return zeros;
}

LengthRecurrence::LengthRecurrence(const ParrySubstitution& phi)
    : phi_(&phi), lengths_(phi.alphabet_size(), BigInt(1)) {}

void LengthRecurrence::advance() {
    // |φ^{j+1}(l)| = α_l |φ^j(0)| + |φ^j(successor(l))|
    std::vector<BigInt> next(lengths_.size());
    for (std::size_t l = 0; l < lengths_.size(); ++l) {
        next[l] = lengths_[0] * phi_->alpha(l);
        int s = phi_->successor(static_cast<Letter>(l));
        if (s >= 0) next[l] += lengths_[static_cast<std::size_t>(s)];
    }
    lengths_ = std::move(next);
    ++level_;
}

LengthTable block_lengths(const ParrySubstitution& phi, std::size_t K) {
    LengthTable table;
    table.values.reserve(K + 1);
    LengthRecurrence rec(phi);
    table.values.push_back(rec.length(0));
    for (std::size_t k = 1; k <= K; ++k) {
        rec.advance();
        table.values.push_back(rec.length(0));
    }
    return table;
}

Word fixed_point_prefix(const ParrySubstitution& phi, std::size_t length, std::size_t cap) {
    if (length > cap) {
        throw ResourceError("prefix of length " + std::to_string(length) + " exceeds the cap of " +
                            std::to_string(cap) + " letters");
    }
    // φ of a prefix is a prefix of φ of the longer word, so truncating between passes is safe.
    Word current{Letter{0}};
    while (current.size() < length) {
        Word next = apply_morphism(phi, current);
        current = next.size() > length ? next.prefix(length) : std::move(next);
    }
    return current.prefix(length);
}

} // namespace abelian
