#include "tambara/integer.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace tambara;

namespace {

std::string str128(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

} // namespace

TEST_CASE("small arithmetic promotes to big on overflow") {
    Int big = Int(std::numeric_limits<long long>::max()) + Int(1);
    CHECK_FALSE(big.is_small());
    CHECK(big.str() == "9223372036854775808");
    CHECK((big - Int(1)).is_small());
    Int m = Int(std::numeric_limits<long long>::min());
    CHECK((-m).str() == "9223372036854775808");
    CHECK((m * Int(-1)).str() == "9223372036854775808");
}

TEST_CASE("ring operations agree with 128-bit arithmetic") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-(1LL << 62), 1LL << 62);
    for (int i = 0; i < 2000; ++i) {
        long long a = d(rng), b = d(rng);
        __int128 A = a, B = b;
        CHECK((Int(a) + Int(b)).str() == str128(A + B));
        CHECK((Int(a) - Int(b)).str() == str128(A - B));
        CHECK((Int(a) * Int(b)).str() == str128(A * B));
        if (b != 0) {
            CHECK((Int(a) / Int(b)).str() == str128(A / B));
            CHECK((Int(a) % Int(b)).str() == str128(A % B));
        }
        CHECK(((Int(a) * Int(b)) <=> Int(0)) == ((A * B > 0) ? std::strong_ordering::greater
                                                               : (A * B < 0 ? std::strong_ordering::less : std::strong_ordering::equal)));
    }
}

TEST_CASE("gcd, floor division and divisibility") {
    CHECK(gcd(Int(12), Int(-18)) == Int(6));
    CHECK(lcm(Int(4), Int(6)) == Int(12));
    CHECK(floor_div(Int(-7), Int(2)) == Int(-4));
    CHECK(floor_mod(Int(-7), Int(2)) == Int(1));
    CHECK(divides(Int(3), Int(-9)));
    CHECK_FALSE(divides(Int(0), Int(5)));
    CHECK(divides(Int(0), Int(0)));
    CHECK(pow(Int(2), 70).str() == "1180591620717411303424");
    CHECK(exact_div(pow(Int(3), 50), pow(Int(3), 48)) == Int(9));
}

TEST_CASE("parse and hash are consistent across representations") {
    Int a = Int::parse("-123456789012345678901234567890");
    CHECK(a.str() == "-123456789012345678901234567890");
    Int b = Int::parse("42");
    CHECK(b.is_small());
    Int c = (pow(Int(10), 30) - pow(Int(10), 30)) + Int(42);
    CHECK(c == b);
    CHECK(c.hash() == b.hash());
}

TEST_CASE("vector helpers") {
    Vec v = to_vec({1, 2, 3});
    CHECK(v + v == to_vec({2, 4, 6}));
    CHECK(Int(3) * v == to_vec({3, 6, 9}));
    CHECK(is_zero(v - v));
    Mat m = to_mat({{1, 2}, {3, 4}});
    CHECK(apply(m, to_vec({1, 1}), 2) == to_vec({4, 6}));
    CHECK(mat_mul(m, identity_mat(2), 2) == m);
}
