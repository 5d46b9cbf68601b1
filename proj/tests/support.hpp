#pragma once

#include <random>
#include <string>
#include <vector>

#include "abelian/codecomp.hpp"
#include "abelian/parry.hpp"

namespace abelian::testing {

inline ParrySubstitution tribonacci() { return ParrySubstitution::simple(3, {1, 1, 1}); }
inline ParrySubstitution simple_211() { return ParrySubstitution::simple(3, {2, 1, 1}); }
inline ParrySubstitution simple_1001() { return ParrySubstitution::simple(4, {1, 0, 0, 1}); }
inline ParrySubstitution u2() { return ParrySubstitution::non_simple(1, 2, {2, 0, 1}); }

struct Named {
    std::string name;
    ParrySubstitution phi;
};

inline std::vector<Named> four_substitutions() {
    return {{"tribonacci", tribonacci()}, {"simple 2,1,1", simple_211()},
            {"simple 1,0,0,1", simple_1001()}, {"nonsimple u2", u2()}};
}

inline Word random_word(std::mt19937_64& rng, std::size_t length, std::size_t alphabet_size) {
    std::uniform_int_distribution<unsigned> letter(0, static_cast<unsigned>(alphabet_size - 1));
    std::vector<Letter> out(length);
    for (auto& l : out) l = static_cast<Letter>(letter(rng));
    return Word(std::move(out));
}

inline RelativeParikhVector rel(std::initializer_list<std::int64_t> v) { return RelativeParikhVector(std::vector<std::int64_t>(v)); }

inline BlockPair pair(const char* z, const char* z_tilde) { return {Word::parse(z), Word::parse(z_tilde)}; }

} // namespace abelian::testing
