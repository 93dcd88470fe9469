#include "tambara/transfer.hpp"

#include <doctest.h>

#include <numeric>

using namespace tambara;

namespace {

using Rel = std::set<Edge>;

// independent reading of the axioms on the divisor lattice
bool brute_valid(int n, const Rel& r) {
    for (auto [K, H] : r) {
        if (H % K) return false;
        for (auto [K2, H2] : r)
            if (H == K2 && !r.count({K, H2})) return false;
        for (int L = 1; L <= H; ++L)
            if (H % L == 0 && !r.count({std::gcd(K, L), L})) return false;
    }
    (void)n;
    return true;
}

std::vector<Rel> brute_systems(int n) {
    std::vector<Edge> cand;
    std::vector<int> divs;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    for (int K : divs)
        for (int H : divs)
            if (K != H && H % K == 0) cand.push_back({K, H});
    std::vector<Rel> out;
    for (unsigned mask = 0; mask < (1u << cand.size()); ++mask) {
        Rel r;
        for (int d : divs) r.insert({d, d});
        for (size_t i = 0; i < cand.size(); ++i)
            if (mask >> i & 1) r.insert(cand[i]);
        if (brute_valid(n, r)) out.push_back(r);
    }
    return out;
}

bool brute_saturated(const Rel& r) {
    for (auto [A, C] : r)
        for (int B = 1; B <= C; ++B)
            if (B % A == 0 && C % B == 0 && !r.count({B, C})) return false;
    return true;
}

bool brute_compatible(const Rel& m, const Rel& a) {
    for (auto [B, A] : m)
        for (int C = 1; C <= A; ++C)
            if (A % C == 0 && a.count({std::gcd(B, C), B}) && !a.count({C, A})) return false;
    return true;
}

} // namespace

TEST_CASE("enumeration matches a brute-force reading of the axioms") {
    for (int n : {2, 3, 4, 6, 8, 9, 12, 27}) {
        auto lat = cyclic_lattice(n);
        auto mine = enumerate_transfer_systems(lat);
        auto brute = brute_systems(n);
        REQUIRE(mine.size() == brute.size());
        for (size_t i = 0; i < mine.size(); ++i) CHECK(std::find(brute.begin(), brute.end(), mine[i].pairs()) != brute.end());
        size_t pairs = 0;
        for (const auto& m : brute)
            for (const auto& a : brute) pairs += brute_compatible(m, a);
        CHECK(enumerate_compatible_pairs(lat).size() == pairs);
    }
}

TEST_CASE("chain counts") {
    CHECK(enumerate_transfer_systems(cyclic_lattice(2)).size() == 2);
    CHECK(enumerate_transfer_systems(cyclic_lattice(4)).size() == 5);
    CHECK(enumerate_transfer_systems(cyclic_lattice(8)).size() == 14);
    CHECK(enumerate_compatible_pairs(cyclic_lattice(5)).size() == 3);
    CHECK(enumerate_compatible_pairs(cyclic_lattice(25)).size() == 12);
    CHECK(enumerate_compatible_pairs(cyclic_lattice(27)).size() == 55);
}

TEST_CASE("validation witnesses") {
    auto lat = cyclic_lattice(4);
    CHECK_FALSE(validate_transfer_system(lat, {{1, 2}, {1, 4}}));
    auto v = validate_transfer_system(lat, {{1, 4}});
    REQUIRE(v);
    CHECK(v->axiom == "restriction");
    CHECK_FALSE(validate_transfer_system(cyclic_lattice(2), {{1, 2}}));
    auto t = validate_transfer_system(cyclic_lattice(8), {{1, 2}, {2, 4}, {1, 4}, {4, 8}});
    REQUIRE(t);
    CHECK(t->axiom == "transitivity");
}

TEST_CASE("hull is the least saturated system above") {
    for (int n : {4, 8, 9, 12}) {
        auto lat = cyclic_lattice(n);
        auto all = enumerate_transfer_systems(lat);
        for (const auto& ts : all) {
            CHECK(is_saturated(ts) == brute_saturated(ts.pairs()));
            CHECK(is_saturated(ts) == is_compatible_pair(ts, ts));
            Rel meet;
            bool first = true;
            for (const auto& o : all) {
                if (!brute_saturated(o.pairs()) || !ts.subset_of(o)) continue;
                if (first) {
                    meet = o.pairs();
                    first = false;
                } else {
                    Rel keep;
                    for (auto e : meet)
                        if (o.pairs().count(e)) keep.insert(e);
                    meet = keep;
                }
            }
            CHECK(saturated_hull(ts).pairs() == meet);
            CHECK(saturated_hull(saturated_hull(ts)) == saturated_hull(ts));
        }
        for (const auto& pr : enumerate_compatible_pairs(lat)) CHECK(saturated_hull(pr.mult).subset_of(pr.add));
    }
    auto lat = cyclic_lattice(4);
    CHECK(saturated_hull(parse_system(lat, "O3")) == complete_system(lat));
    CHECK(is_saturated(parse_system(lat, "O1")));
}

TEST_CASE("compatibility examples") {
    auto lat = cyclic_lattice(4);
    for (const auto& ts : enumerate_transfer_systems(lat)) {
        CHECK(is_compatible_pair(trivial_system(lat), ts));
        CHECK(is_compatible_pair(ts, complete_system(lat)));
    }
    CHECK(check_compatible_pair(parse_system(lat, "O1"), parse_system(lat, "O2")));
    CHECK_FALSE(is_compatible_pair(parse_system(lat, "O3"), parse_system(lat, "O3")));
}

TEST_CASE("path components") {
    auto lat = cyclic_lattice(4);
    auto c = path_components(parse_system(lat, "O1"));
    REQUIRE(c.size() == 2);
    CHECK(c[0].members == std::vector<int>{1, 2});
    CHECK(c[1].members == std::vector<int>{4});
    auto l6 = cyclic_lattice(6);
    auto v = path_components(parse_system(l6, "(1,2),(1,3)"));
    REQUIRE(v.size() == 2);
    CHECK(v[0].minimum == 1);
    CHECK(v[0].members == std::vector<int>{1, 2, 3});
    CHECK(path_components(trivial_system(lat)).size() == 3);
}

TEST_CASE("names and parsing") {
    auto lat = cyclic_lattice(9);
    CHECK(system_name(parse_system(lat, "O2")) == "O2");
    CHECK(parse_system(lat, "(3,9)") == parse_system(lat, "O2"));
    CHECK(parse_system(lat, "1:3/1:9") == parse_system(lat, "O3"));
    CHECK_THROWS(parse_system(lat, "O7"));
    CHECK_THROWS(parse_system(cyclic_lattice(6), "O1"));
    CHECK(pair_name({trivial_system(lat), complete_system(lat)}) == "(Otriv,Ocomp)");
}
