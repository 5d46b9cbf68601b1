#include "abelian/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "abelian/error.hpp"

namespace abelian {

namespace {

Letter parse_letter(std::string_view token) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        throw WordError("invalid letter '" + std::string(token) + "'");
    }
    if (value >= kMaxAlphabet) {
        throw WordError("letter " + std::to_string(value) + " exceeds the supported alphabet");
    }
    return static_cast<Letter>(value);
}

} // namespace

Word Word::parse(std::string_view text) {
    std::vector<Letter> out;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto stop = text.find(',', start);
            if (stop == std::string_view::npos) stop = text.size();
            out.push_back(parse_letter(text.substr(start, stop - start)));
            start = stop + 1;
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw WordError(std::string("invalid letter '") + c + "'");
            out.push_back(static_cast<Letter>(c - '0'));
        }
    }
    return Word(std::move(out));
}

Word Word::prefix(std::size_t length) const {
    if (length > size()) throw WordError("prefix longer than word");
    return Word(std::span<const Letter>(letters_).first(length));
}

Word Word::slice(std::size_t pos, std::size_t length) const {
    if (pos > size() || length > size() - pos) throw WordError("slice out of range");
    return Word(std::span<const Letter>(letters_).subspan(pos, length));
}

bool Word::starts_with(const Word& other) const noexcept {
    return other.size() <= size() && std::equal(other.begin(), other.end(), begin());
}

bool Word::ends_with(const Word& other) const noexcept {
    return other.size() <= size() && std::equal(other.begin(), other.end(), end() - static_cast<std::ptrdiff_t>(other.size()));
}

std::string Word::to_string() const {
    bool small = std::all_of(begin(), end(), [](Letter l) { return l < 10; });
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (small) {
            out.push_back(static_cast<char>('0' + letters_[i]));
        } else {
            if (i) out.push_back(',');
            out += std::to_string(letters_[i]);
        }
    }
    return out;
}

Word operator+(const Word& a, const Word& b) {
    std::vector<Letter> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Word(std::move(out));
}

std::string render(const Word& w, std::size_t alphabet_size) {
    if (alphabet_size <= 10) {
        std::string out;
        out.reserve(w.size());
        for (Letter l : w) out.push_back(static_cast<char>('0' + l));
        return out;
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(w[i]);
    }
    return out;
}

Word left_cancel(const Word& x, const Word& v) {
    if (!v.starts_with(x)) {
        throw WordError("cannot cancel " + x.to_string() + " on the left of " + v.to_string());
    }
    return v.slice(x.size(), v.size() - x.size());
}

Word right_cancel(const Word& v, const Word& x) {
    if (!v.ends_with(x)) {
        throw WordError("cannot cancel " + x.to_string() + " on the right of " + v.to_string());
    }
    return v.prefix(v.size() - x.size());
}

std::set<Word> factors_of_length(const Word& w, std::size_t n) {
    std::set<Word> out;
    if (n > w.size()) return out;
    auto letters = w.letters();
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
        out.emplace(letters.subspan(i, n));
    }
    return out;
}

std::uint64_t ParikhVector::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

ParikhVector operator+(const ParikhVector& a, const ParikhVector& b) {
    if (a.size() != b.size()) throw WordError("Parikh vectors over different alphabets");
    std::vector<std::uint64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return ParikhVector(std::move(out));
}

std::int64_t RelativeParikhVector::sum() const noexcept {
    return std::accumulate(deltas_.begin(), deltas_.end(), std::int64_t{0});
}

bool RelativeParikhVector::is_zero() const noexcept {
    return std::all_of(deltas_.begin(), deltas_.end(), [](std::int64_t d) { return d == 0; });
}

std::string RelativeParikhVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < deltas_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(deltas_[i]);
    }
    out.push_back(')');
    return out;
}

RelativeParikhVector operator-(const ParikhVector& a, const ParikhVector& b) {
    if (a.size() != b.size()) throw WordError("Parikh vectors over different alphabets");
    std::vector<std::int64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
    }
    return RelativeParikhVector(std::move(out));
}

ParikhVector parikh(std::span<const Letter> w, std::size_t alphabet_size) {
    std::vector<std::uint64_t> counts(alphabet_size, 0);
    for (Letter l : w) {
        if (l >= alphabet_size) {
            throw WordError("letter " + std::to_string(l) + " outside alphabet of size " +
                            std::to_string(alphabet_size));
        }
        ++counts[l];
    }
    return ParikhVector(std::move(counts));
}

ParikhVector parikh(const Word& w, std::size_t alphabet_size) {
    return parikh(w.letters(), alphabet_size);
}

RelativeParikhVector relative_parikh(const Word& w, const Word& reference, std::size_t alphabet_size) {
    if (w.size() != reference.size()) {
        throw WordError("relative Parikh vector needs equal lengths (" + std::to_string(w.size()) +
                        " vs " + std::to_string(reference.size()) + ")");
    }
    return parikh(w, alphabet_size) - parikh(reference, alphabet_size);
}

} // namespace abelian
