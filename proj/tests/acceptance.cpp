// Acceptance suite: one PASS/FAIL line per criterion, each with its pinned runtime limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "abelian/codecomp.hpp"
#include "abelian/error.hpp"
#include "abelian/numeration.hpp"
#include "abelian/oracle.hpp"
#include "abelian/sweep.hpp"
#include "golden.hpp"

using namespace abelian;
using namespace abelian::testing;

namespace {

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<bool(std::string&)> body;  // fills a detail note
};

const std::vector<unsigned> kOneZero{1, 0};
const std::vector<unsigned> kOneZeros{1, 0, 0, 0};
const std::vector<unsigned> kTailOne{1};
const std::vector<unsigned> kTailZero{0};

bool ac_family(const std::vector<unsigned>& block, const std::vector<unsigned>& tail, std::size_t first,
               std::size_t last, std::size_t expected, const std::vector<std::size_t>& oracle_at, std::string& note) {
    const auto t = tribonacci();
    bool ok = true;
    for (std::size_t i = first; i <= last; ++i) {
        const FDigits digits = FDigits::pattern(block, i, tail);
        const auto r = abelian_complexity(digits, t, Method::codec);
        if (r.fallback || r.value != expected) {
            note += " codec i=" + std::to_string(i) + " gave " + std::to_string(r.value) + ";";
            ok = false;
        }
    }
    for (std::size_t i : oracle_at) {
        const BigInt n = frep_value(FDigits::pattern(block, i, tail), t);
        const std::size_t got = brute_ac(n.convert_to<std::size_t>(), t);
        note += " oracle n=" + n.str() + ":" + std::to_string(got) + ";";
        ok = ok && got == expected;
    }
    return ok;
}

bool in_range_3_to_7(const std::vector<std::size_t>& values, std::size_t first, std::string& note) {
    std::size_t lo = 100, hi = 0;
    bool ok = true;
    for (std::size_t i = 0; i < values.size(); ++i) {
        lo = std::min(lo, values[i]);
        hi = std::max(hi, values[i]);
        if (values[i] < 3 || values[i] > 7) {
            ok = false;
            note += " n=" + std::to_string(first + i) + ":" + std::to_string(values[i]) + ";";
        }
    }
    note += " observed range [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    return ok;
}

std::vector<Criterion> criteria() {
    std::vector<Criterion> out;

    out.push_back({1, "golden Z-sets of the ((1,0)^i,1) family", 1.0, [](std::string& note) {
        const auto t = tribonacci();
        const bool n0 = z_set(FDigits{1}, t) == tribonacci_z_n0();
        const bool n1 = z_set(FDigits::pattern(kOneZero, 1, kTailOne), t) == tribonacci_z_n1();
        const bool n2 = z_set(FDigits::pattern(kOneZero, 2, kTailOne), t) == tribonacci_z_n2();
        note = std::string(" n0:") + (n0 ? "ok" : "differs") + " n1:" + (n1 ? "ok" : "differs") + " n2:" + (n2 ? "ok" : "differs");
        return n0 && n1 && n2;
    }});

    out.push_back({2, "AC = 4 on ((1,0)^i,1), i=1..12, oracle for i<=5", 10.0, [](std::string& note) {
        return ac_family(kOneZero, kTailOne, 1, 12, 4, {1, 2, 3, 4, 5}, note);
    }});

    out.push_back({3, "AC = 5 on ((1,0,0,0)^i,1), i=2..8, oracle at 163 and 1868", 30.0, [](std::string& note) {
        return ac_family(kOneZeros, kTailOne, 2, 8, 5, {2, 3}, note);
    }});

    out.push_back({4, "AC = 6 on ((1,0,0,0)^i,0), i=3..8, oracle at 1867, relative Parikh set", 30.0, [](std::string& note) {
        bool ok = ac_family(kOneZeros, kTailZero, 3, 8, 6, {3}, note);
        const auto t = tribonacci();
        for (std::size_t i = 3; i <= 8; ++i) {
            const auto set = rel_parikh_set(z_set(FDigits::pattern(kOneZeros, i, kTailZero), t), 3);
            if (set != tribonacci_rel_M()) {
                note += " rel set differs at i=" + std::to_string(i) + ";";
                ok = false;
            }
        }
        ok = ok && brute_rel_parikh_set(1867, t) == tribonacci_rel_M();
        return ok;
    }});

    out.push_back({5, "tribonacci brute AC(n) in {3..7} for n<=2000", 60.0, [](std::string& note) {
        const Oracle oracle(tribonacci(), 2000);
        return in_range_3_to_7(oracle_ac_range_parallel(oracle, 1, 2000), 1, note);
    }});

    out.push_back({6, "codec = oracle for n<=300 on four substitutions", 120.0, [](std::string& note) {
        bool ok = true;
        for (const auto& [name, phi] : four_substitutions()) {
            const auto rows = verify_range(phi, 1, 300);
            std::size_t fallbacks = 0, mismatches = 0;
            for (const auto& r : rows) {
                fallbacks += r.fallback();
                mismatches += !r.agrees();
            }
            note += " [" + name + ": " + std::to_string(fallbacks) + " fallbacks, " + std::to_string(mismatches) + " mismatches]";
            ok = ok && mismatches == 0;
            if (name == "tribonacci") ok = ok && fallbacks == 0;
        }
        return ok;
    }});

    out.push_back({7, "numeration round trips (values to 1e5, prefixes to 1e4)", 30.0, [](std::string& note) {
        bool ok = true;
        for (const auto& [name, phi] : four_substitutions()) {
            for (std::size_t n = 0; n <= 100'000; ++n) {
                if (frep_value(to_normal_frep(n, phi), phi) != n) {
                    note += " " + name + " value n=" + std::to_string(n) + ";";
                    ok = false;
                    break;
                }
            }
            const Word u = fixed_point_prefix(phi, 10'000);
            for (std::size_t n = 0; n <= 10'000; ++n) {
                const Word w = prefix_from_frep(to_normal_frep(n, phi), phi);
                if (!std::equal(w.begin(), w.end(), u.begin(), u.begin() + n) || w.size() != n) {
                    note += " " + name + " prefix n=" + std::to_string(n) + ";";
                    ok = false;
                    break;
                }
            }
        }
        return ok;
    }});

    out.push_back({8, "covering prefix holds every factor, n<=200", 60.0, [](std::string& note) {
        bool ok = true;
        for (const auto& [name, phi] : four_substitutions()) {
            for (std::size_t n = 1; n <= 200; ++n) {
                const Word cover = covering_prefix(n, phi);
                const Word wider = fixed_point_prefix(phi, 3 * cover.size());
                if (factors_of_length(cover, n) != factors_of_length(wider, n)) {
                    note += " " + name + " n=" + std::to_string(n) + ";";
                    ok = false;
                }
            }
        }
        return ok;
    }});

    out.push_back({9, "non-simple u2 brute AC(n) in {3..7} for n<=1000", 60.0, [](std::string& note) {
        const Oracle oracle(u2(), 1000);
        return in_range_3_to_7(oracle_ac_range_parallel(oracle, 1, 1000), 1, note);
    }});

    out.push_back({10, "randomized property suite", 60.0, [](std::string& note) {
        std::mt19937_64 rng(31337);
        std::size_t checked = 0, skipped = 0;
        bool ok = true;
        for (const auto& [name, phi] : four_substitutions()) {
            const std::size_t A = phi.alphabet_size();
            const RelativeParikhVector zero(std::vector<std::int64_t>(A, 0));
            const auto F = block_lengths(phi, 10);
            std::uniform_int_distribution<std::uint64_t> pick(1, F[9].convert_to<std::uint64_t>());
            for (int trial = 0; trial < 60; ++trial) {
                const BigInt n = pick(rng);
                ZSet z;
                try {
                    z = z_set(n, phi);
                } catch (const InapplicableStep&) {
                    ++skipped;
                    continue;
                }
                ++checked;
                for (const auto& p : z.pairs()) ok = ok && parikh(p.z, A) == parikh(p.z_tilde, A);
                const auto set = rel_parikh_set(z, A);
                ok = ok && set.count(zero) == 1;
                for (const auto& v : set) ok = ok && v.sum() == 0;
            }
            const Admissible admissible = zero_prefix_admissible(phi);
            for (int trial = 0; trial < 100; ++trial) {
                const Word v = random_word(rng, 1 + trial % 40, A);
                std::vector<Letter> letters(v.begin(), v.end());
                std::shuffle(letters.begin(), letters.end(), rng);
                const Word w(std::move(letters));
                const auto d = co_decompose(v, w, A, admissible);
                ok = ok && d.top() == v && d.bottom() == w;
                for (const auto& p : d.ordered_pairs()) ok = ok && parikh(p.z, A) == parikh(p.z_tilde, A);
            }
        }
        const auto t = tribonacci();
        for (const FDigits& start : {FDigits{1}, FDigits{1, 0, 1}, FDigits{1, 0, 1, 0, 1}}) {
            const ZSet z = z_set(start, t);
            ok = ok && z_stroke(z, FDigits{0, 1}, t) == z_step(z_step(z, 0, t), 1, t);
        }
        note = " " + std::to_string(checked) + " Z-sets checked, " + std::to_string(skipped) + " inapplicable";
        return ok;
    }});

    return out;
}

} // namespace

int main() {
    int failures = 0;
    for (const auto& c : criteria()) {
        std::string note;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(note);
        } catch (const std::exception& e) {
            note += std::string(" exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.limit_seconds;
        if (!in_time) note += " over the time limit";
        const bool pass = ok && in_time;
        failures += !pass;
        std::printf("[%s] criterion %2d: %s (%.2f s, limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    seconds, c.limit_seconds, note.c_str());
    }
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
