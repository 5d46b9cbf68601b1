#pragma once

#include "support.hpp"

namespace abelian::testing {

inline ZSet zset_of(std::vector<BlockPair> pairs) { return ZSet(std::move(pairs), {}); }

inline ZSet tribonacci_z_n0() { return zset_of({pair("01", "10"), pair("02", "20"), pair("0", "0")}); }

inline ZSet tribonacci_z_n1() {
    return zset_of({pair("01", "10"), pair("0", "0"), pair("201", "102"), pair("0201", "1020"), pair("02", "20")});
}

inline ZSet tribonacci_z_n2() {
    return zset_of({pair("01", "10"), pair("0", "0"), pair("201", "102"), pair("0201", "1020"), pair("02", "20"),
                    pair("1", "1"), pair("2", "2")});
}

inline ZSet tribonacci_z_N2() {
    return zset_of({pair("01", "10"), pair("02", "20"), pair("0", "0"), pair("0102", "2010"), pair("1", "1"),
                    pair("2", "2"), pair("201", "102")});
}

inline ZSet tribonacci_z_N3() {
    return zset_of({pair("01", "10"), pair("02", "20"), pair("0", "0"), pair("0102", "2010"), pair("1", "1"),
                    pair("2", "2"), pair("201", "102"), pair("00102", "20100")});
}

inline ZSet tribonacci_z_M3() {
    return zset_of({pair("0", "0"), pair("1", "1"), pair("2", "2"), pair("102", "201"), pair("10", "01"),
                    pair("20", "02"), pair("2010", "0102"), pair("0102", "2010")});
}

inline RelativeParikhSet tribonacci_rel_n1() { return {rel({-1, 1, 0}), rel({0, 0, 0}), rel({0, 1, -1}), rel({-1, 0, 1})}; }

inline RelativeParikhSet tribonacci_rel_N() {
    return {rel({0, 0, 0}), rel({-1, 1, 0}), rel({-1, 0, 1}), rel({0, -1, 1}), rel({0, 1, -1})};
}

inline RelativeParikhSet tribonacci_rel_M() {
    return {rel({0, 0, 0}), rel({0, -1, 1}), rel({1, -1, 0}), rel({1, 0, -1}), rel({0, 1, -1}), rel({-1, 0, 1})};
}

} // namespace abelian::testing
