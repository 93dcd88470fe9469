#include "tambara/lattice.hpp"

#include <doctest.h>

#include <numeric>

using namespace tambara;

TEST_CASE("primes") {
    CHECK(prime_factors(12) == std::vector<long>{2, 3});
    CHECK(prime_factors(27) == std::vector<long>{3});
    CHECK(prime_factors(1).empty());
    CHECK(small_primes_avoiding({2}, 3) == std::vector<long>{3, 5, 7});
    CHECK(small_primes_avoiding({2, 3}, 2) == std::vector<long>{5, 7});
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("subgroups of a cyclic group are its divisors") {
    for (int n : {1, 4, 6, 12, 27, 30}) {
        auto lat = cyclic_lattice(n);
        std::vector<int> divs;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) divs.push_back(d);
        CHECK(lat.subgroups == divs);
        for (int a : divs)
            for (int b : divs) {
                CHECK(lat.intersect(a, b) == std::gcd(a, b));
                CHECK(lat.join(a, b) == std::lcm(a, b));
                CHECK(lat.contains(a, b) == (b % a == 0));
            }
        CHECK(lat.weyl_order(1) == n);
    }
}

TEST_CASE("subgroup labels and bad subgroups") {
    CHECK(subgroup_label(4) == "C_4");
    auto lat = cyclic_lattice(6);
    CHECK_THROWS(lat.require(4));
}
