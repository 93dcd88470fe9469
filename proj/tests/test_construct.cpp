#include "tambara/construct.hpp"

#include <doctest.h>

using namespace tambara;

TEST_CASE("construction selectors") {
    auto a = parse_construction("burnside:p=2,n=2");
    CHECK(a.kind == "burnside");
    CHECK(a.primes == std::vector<long>{2});
    CHECK(a.exponent == 2);
    CHECK(a.order() == 4);
    CHECK(parse_construction(a.str()).order() == 4);
    auto b = parse_construction("burnside:pq=2,3");
    CHECK(b.order() == 6);
    CHECK(parse_construction(b.str()).primes == b.primes);
    auto z = parse_construction("constant_Z", {3});
    CHECK(z.kind == "constantZ");
    CHECK(z.order() == 3);
    CHECK(parse_construction("Z:p=3,n=2").order() == 9);
    CHECK_THROWS(parse_construction("mackey:p=2"));
    CHECK_THROWS(parse_construction("burnside"));
    CHECK_THROWS(parse_construction("burnside:p=4"));
    CHECK_THROWS(parse_construction("burnside:pq=3,3"));
    CHECK_THROWS(parse_construction("burnside:p=2,k=1"));
    CHECK_THROWS(build(parse_construction("initial:p=2")));
}

TEST_CASE("build forgets to the requested pair") {
    auto lat = cyclic_lattice(4);
    auto pr = make_compatible_pair(parse_system(lat, "O1"), parse_system(lat, "O1"));
    auto T = build(parse_construction("burnside:p=2,n=2"), pr);
    CHECK(T.pair == pr);
    CHECK(T.visible_norms() == std::vector<Edge>{{1, 2}});
    CHECK(T.construction == "burnside:p=2,n=2");
}

TEST_CASE("initial Burnside ranks count admissible orbits") {
    for (int n : {4, 6, 8, 9}) {
        auto lat = cyclic_lattice(n);
        for (const auto& pr : enumerate_compatible_pairs(lat)) {
            auto T = initial_burnside(n, pr);
            for (int H : lat.subgroups) {
                size_t admissible = 0;
                for (int K : lat.subgroups)
                    if (pr.add.contains(K, H)) ++admissible;
                CHECK(T.alg(H).rank() == admissible);
            }
        }
    }
    auto lat = cyclic_lattice(6);
    auto O = parse_system(lat, "(1,2),(3,6)");
    auto T = initial_burnside(6, make_compatible_pair(O, O));
    const Algebra& top = T.alg(6);
    REQUIRE(top.rank() == 2);
    Vec x = top.basis(1);
    CHECK(top.mul(x, x) == top.scale(Int(2), x));
    CHECK(T.alg(3).rank() == 1);
    auto full = initial_burnside(6, make_compatible_pair(complete_system(lat), complete_system(lat)));
    CHECK(full.alg(6).rank() == 4);
}

TEST_CASE("geometric fixed points") {
    auto q = geometric_fixed_points(burnside_cp(2), 1, 2);
    CHECK(q.algebra->rank() == 1);
    CHECK_FALSE(q.algebra->has_torsion());
    CHECK(q.map(to_vec({0, 1})) == to_vec({0}));
    auto z = geometric_fixed_points(constant_Z(3), 1, 3);
    REQUIRE(z.algebra->rank() == 1);
    CHECK(z.algebra->has_torsion());
    CHECK(z.map(to_vec({4})) == to_vec({1}));
    auto R = restrict_levels(burnside_cp2(2), {2, 4});
    auto r = geometric_fixed_points(R, 2, 4);
    CHECK(r.algebra->rank() == 1);
    CHECK(r.map(to_vec({0, 1, 0})) == to_vec({0}));
    CHECK(r.map(to_vec({0, 0, 1})) == to_vec({0}));
}

TEST_CASE("ghost constructions") {
    auto G = ghost(burnside_cp(2));
    CHECK(G.ghost.alg(2).rank() == 2);
    CHECK(G.ghost_top(to_vec({0, 1})) == to_vec({2, 0}));
    CHECK(G.ghost_top(to_vec({1, 0})) == to_vec({1, 1}));
    CHECK_FALSE(check_ghost_map(G, {200, 20240601, 10}));
    CHECK_FALSE(check_axioms(G.ghost, {100, 1, 6}));

    auto R = restrict_levels(burnside_cp2(3), {3, 9});
    auto H = ghost(R);
    CHECK(H.ghost.alg(9).rank() == 3); // Z[t]/(t^2 - pt) x Z
    CHECK_FALSE(check_ghost_map(H, {200, 20240601, 10}));
    CHECK_THROWS(ghost(burnside_cp2(2)));
}
