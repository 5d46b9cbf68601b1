#include <doctest.h>

#include "abelian/codecomp.hpp"
#include "abelian/error.hpp"
#include "abelian/numeration.hpp"
#include "abelian/oracle.hpp"
#include "golden.hpp"

using namespace abelian;
using namespace abelian::testing;

TEST_CASE("co-decomposition without a predicate") {
    const auto d = co_decompose(Word::parse("0102010"), Word::parse("1020100"), 3);
    REQUIRE(d.block_count() == 4);
    CHECK(d.ordered_pairs()[0] == pair("01", "10"));
    CHECK(d.ordered_pairs()[3] == pair("0", "0"));
    CHECK(d.canonical_set().size() == 3);
    CHECK(d.top() == Word::parse("0102010"));
    CHECK(d.bottom() == Word::parse("1020100"));
    CHECK(co_decompose(Word{}, Word{}, 3).block_count() == 0);
    CHECK_THROWS_AS(co_decompose(Word::parse("01"), Word::parse("00"), 3), WordError);
}

TEST_CASE("co-decomposition with a predicate falls back to the whole pair") {
    const Admissible never = [](std::span<const Letter>) { return false; };
    const auto d = co_decompose(Word::parse("0102"), Word::parse("1020"), 3, never);
    REQUIRE(d.block_count() == 1);
    CHECK(d.ordered_pairs()[0] == pair("0102", "1020"));
}

TEST_CASE("R and covering prefixes") {
    CHECK(compute_R(tribonacci()) == 3);
    CHECK(compute_R(simple_211()) == 2);
    CHECK(compute_R(simple_1001()) == 6);
    CHECK(compute_R(u2()) == 4);
    const auto t = tribonacci();
    CHECK(covering_exponent(1, t) == 0);
    CHECK(covering_exponent(5, t) == 3);
    CHECK(covering_length(1, t) == 8);
    CHECK(covering_prefix(1, t) == Word::parse("01020100"));
    CHECK(covering_length(715, t) == 6483);
    CHECK_THROWS_AS(covering_prefix(BigInt(1) << 40, t, 10'000), ResourceError);
    for (const auto& [name, phi] : four_substitutions()) {
        CAPTURE(name);
        const unsigned R = compute_R(phi);
        const Word u = fixed_point_prefix(phi, 5000);
        CHECK(u.starts_with(apply_power(phi, R, Word{0}) + Word{0}));
        for (std::size_t n = 1; n <= 60; ++n) {
            const Word cover = covering_prefix(n, phi);
            CHECK(u.starts_with(cover));
            CHECK(cover.ends_with(u.prefix(n)));
        }
    }
}

TEST_CASE("golden tribonacci Z-sets") {
    const auto t = tribonacci();
    CHECK(z_set(FDigits{1}, t) == tribonacci_z_n0());
    CHECK(z_set(FDigits{1, 0, 1}, t) == tribonacci_z_n1());
    CHECK(z_set(FDigits{1, 0, 1, 0, 1}, t) == tribonacci_z_n2());
    CHECK(z_set(BigInt(163), t) == tribonacci_z_N2());
    CHECK(z_set(BigInt(1868), t) == tribonacci_z_N3());
    CHECK(z_set(BigInt(1867), t) == tribonacci_z_M3());
    CHECK(z_set(BigInt(5), t).provenance() == FDigits{1, 0, 1});
    CHECK(z_set(BigInt(18), t).render(3).find("0201 | 1020\n") != std::string::npos);
}

TEST_CASE("z-step examples") {
    const auto t = tribonacci();
    const ZSet n0 = z_set(FDigits{1}, t);
    CHECK(z_step(z_step(n0, 0, t), 1, t) == tribonacci_z_n1());
    const ZSet n2 = z_set(FDigits{1, 0, 1, 0, 1}, t);
    CHECK(z_step(z_step(n2, 0, t), 1, t) == n2);
    CHECK_THROWS_AS(z_step(zset_of({pair("1", "1")}), 1, u2()), InapplicableStep);
    CHECK_THROWS_AS(z_step(n0, 2, t), InvalidRepresentation);
    const ZSet base = z_base(0, t);
    for (const auto& p : base.pairs()) CHECK(p.z == p.z_tilde);
    CHECK_THROWS_AS(z_set(FDigits{}, t), InvalidRepresentation);
}

TEST_CASE("z-base with a nonzero digit on the non-simple example") {
    const auto u = u2();
    const ZSet z = z_base(1, u);
    CHECK(z.size() >= 1);
    for (const auto& p : z.pairs()) CHECK(parikh(p.z, 3) == parikh(p.z_tilde, 3));
    CHECK(rel_parikh_set(z, 3) == brute_rel_parikh_set(1, u));
}

TEST_CASE("multi-digit strokes agree with single steps") {
    const auto t = tribonacci();
    const std::vector<FDigits> starts{FDigits{1}, FDigits{1, 0, 1}, FDigits{1, 0, 1, 0, 1}};
    for (const auto& start : starts) {
        const ZSet z = z_set(start, t);
        CHECK(z_stroke(z, FDigits{0, 1}, t) == z_step(z_step(z, 0, t), 1, t));
    }
}

TEST_CASE("relative Parikh sets") {
    const auto t = tribonacci();
    CHECK(rel_parikh_set(z_set(BigInt(5), t), 3) == tribonacci_rel_n1());
    CHECK(rel_parikh_set(zset_of({pair("0", "0")}), 3) == RelativeParikhSet{rel({0, 0, 0})});
    CHECK(rel_parikh_set(z_set(BigInt(1), t), 3) == RelativeParikhSet{rel({0, 0, 0}), rel({-1, 1, 0}), rel({-1, 0, 1})});
    CHECK(rel_parikh_set(z_set(BigInt(1867), t), 3) == tribonacci_rel_M());
    CHECK(rel_parikh_set(z_set(BigInt(163), t), 3) == tribonacci_rel_N());
}

TEST_CASE("abelian complexity routes") {
    const auto t = tribonacci();
    CHECK(abelian_complexity(BigInt(5), t, Method::codec).value == 4);
    CHECK(abelian_complexity(BigInt(163), t, Method::oracle).value == 5);
    const auto both = abelian_complexity(BigInt(1867), t, Method::both);
    CHECK(both.value == 6);
    CHECK(both.codec_value == 6);
    CHECK(both.oracle_value == 6);
    CHECK_FALSE(both.fallback);
    CHECK(parse_method("both") == Method::both);
    CHECK(to_string(Method::oracle) == "oracle");
    CHECK_THROWS_AS(parse_method("guess"), Error);
    CHECK_THROWS_AS(abelian_complexity(BigInt(1) << 40, t, Method::oracle, 10'000), ResourceError);
    const auto big = abelian_complexity(FDigits::pattern(std::vector<unsigned>{1, 0}, 200, std::vector<unsigned>{1}), t, Method::codec);
    CHECK(big.value == 4);
}

TEST_CASE("stabilization reports") {
    const auto t = tribonacci();
    const std::vector<unsigned> b10{1, 0}, b1000{1, 0, 0, 0}, one{1}, zero{0};
    const auto r4 = detect_stabilization(b10, one, 20, t);
    REQUIRE(r4.stabilized_at);
    CHECK(r4.stable_ac == 4);
    CHECK(r4.infinite_attainment());
    CHECK(r4.trace.front().n == 5);
    const auto r5 = detect_stabilization(b1000, one, 20, t);
    CHECK(r5.stable_ac == 5);
    CHECK(r5.stable_rel_set == tribonacci_rel_N());
    const auto r6 = detect_stabilization(b1000, zero, 20, t);
    CHECK(r6.stable_ac == 6);
    CHECK(r6.stable_rel_set == tribonacci_rel_M());
    CHECK(r6.infinite_attainment());
    const auto short_run = detect_stabilization(b1000, zero, 1, t);
    CHECK_FALSE(short_run.stabilized_at);
    CHECK_FALSE(short_run.infinite_attainment());
    CHECK_THROWS_AS(detect_stabilization(std::vector<unsigned>{1, 1}, one, 3, t), InvalidRepresentation);
    CHECK_THROWS_AS(detect_stabilization(std::vector<unsigned>{0, 1}, one, 3, t), InvalidRepresentation);
}
