#include "tambara/construct.hpp"

#include <doctest.h>

using namespace tambara;

namespace {

Int ipow(const Int& b, unsigned e) {
    Int r(1);
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

// nm_p^{p^2}(a + b t) through marks: (a, a^p, (a + bp)^p) at C_{p^2}, C_p, e
Vec marks_norm(long p, const Int& a, const Int& b) {
    Int P(p);
    Int m_top = a, m_mid = ipow(a, p), m_bot = ipow(a + b * P, p);
    Int c2 = exact_div(m_mid - m_top, P);
    Int c3 = exact_div(m_bot - m_mid, P * P);
    return {m_top, c2, c3};
}

CompatiblePair named_pair(int n, const std::string& om, const std::string& oa) {
    auto lat = cyclic_lattice(n);
    return make_compatible_pair(parse_system(lat, om), parse_system(lat, oa));
}

} // namespace

TEST_CASE("Burnside C_p structure maps") {
    auto T = burnside_cp(2);
    CHECK(T.nm(1, 2, to_vec({3})) == to_vec({3, 3}));
    CHECK(T.res(1, 2, to_vec({0, 1})) == to_vec({2}));
    CHECK(T.tr(1, 2, to_vec({5})) == to_vec({0, 5}));
    CHECK(T.res(1, 2, T.tr(1, 2, to_vec({7}))) == to_vec({14}));
}

TEST_CASE("Burnside C_{p^2} norm agrees with marks and with the closed formula") {
    for (long p : {2L, 3L}) {
        auto T = burnside_cp2(p);
        int P = static_cast<int>(p), P2 = P * P;
        CHECK(T.res(P, P2, to_vec({0, 0, 1})) == to_vec({0, p}));
        CHECK(T.nm(P, P2, to_vec({0, 1})) == Vec{Int(0), Int(0), pow(Int(p), static_cast<unsigned>(p - 2))});
        for (int a = -4; a <= 4; ++a)
            for (int b = -4; b <= 4; ++b) {
                Vec want = marks_norm(p, Int(a), Int(b));
                CHECK(T.nm(P, P2, {Int(a), Int(b)}) == want);
                CHECK(mazur_norm(p, Int(a), Int(b)) == want);
            }
    }
}

TEST_CASE("constant Z") {
    auto Z3 = constant_Z(3);
    CHECK(Z3.nm(1, 3, to_vec({2})) == to_vec({8}));
    CHECK(Z3.tr(1, 3, to_vec({2})) == to_vec({6}));
    auto Z4 = constant_Z(4);
    CHECK(Z4.nm(1, 4, to_vec({3})) == to_vec({81}));
    CHECK(Z4.res(2, 4, to_vec({5})) == to_vec({5}));
}

TEST_CASE("built-in constructions pass the axiom suite") {
    SampleOptions opt{200, 20240601, 10};
    for (int n : {2, 3, 4, 9, 6}) {
        CAPTURE(n);
        auto b = check_axioms(burnside(n), opt);
        CHECK_MESSAGE(!b, (b ? b->check + ": " + b->detail : ""));
        auto z = check_axioms(constant_Z(n), opt);
        CHECK_MESSAGE(!z, (z ? z->check + ": " + z->detail : ""));
    }
    for (const auto& pr : enumerate_compatible_pairs(cyclic_lattice(4))) {
        auto r = check_axioms(initial_burnside(4, pr), {50, 3, 6});
        CHECK_MESSAGE(!r, pair_name(pr));
    }
}

TEST_CASE("corrupted maps are caught") {
    SampleOptions opt{50, 5, 6};
    auto T = burnside_cp(3);
    auto bad_tr = T;
    bad_tr.tr_all[{1, 3}] = to_mat({{1, 1}}); // tr(1) = 1 + t
    auto f = check_frobenius(bad_tr, opt);
    REQUIRE(f);
    auto bad_nm = T;
    bad_nm.nm_all[{1, 3}].fn = [](const Vec& x) { return Vec{pow(x[0], 3), Int(0)}; };
    CHECK(check_tambara_reciprocity(bad_nm, opt));
    CHECK(check_axioms(bad_nm, opt));
}

TEST_CASE("cohomological predicates") {
    for (int n : {2, 3, 4, 9}) {
        auto c = cohomological(constant_Z(n));
        CHECK(c.additive());
        CHECK(c.multiplicative());
    }
    auto c = cohomological(burnside_cp(2));
    REQUIRE(c.additive_failure);
    REQUIRE(c.multiplicative_failure);
    CHECK(c.additive_failure->x == to_vec({1, 0}));
    CHECK(c.multiplicative_failure->x == to_vec({0, 1}));
    // invariant under forgetting
    auto lat = cyclic_lattice(4);
    for (const auto& pr : enumerate_compatible_pairs(lat)) {
        auto f = cohomological(forget_pair(constant_Z(4), pr));
        CHECK(f.multiplicative());
    }
}

TEST_CASE("forgetting and re-exposing structure") {
    auto full = burnside_cp2(2);
    auto triv_comp = named_pair(4, "Otriv", "Ocomp");
    auto F = forget_pair(full, triv_comp);
    CHECK(F.visible_norms().empty());
    CHECK(F.visible_transfers().size() == 3);
    CHECK_FALSE(F.has_nm(2, 4));
    CHECK(F.has_tr(2, 4));
    auto coeff = forget_pair(F, named_pair(4, "Otriv", "Otriv"));
    CHECK(coeff.visible_transfers().empty());
    auto back = with_pair(coeff, full.pair);
    CHECK(back.visible_norms().size() == 3);
    CHECK(back.nm(2, 4, to_vec({0, 1})) == to_vec({0, 0, 1}));
    auto same = forget_pair(full, full.pair);
    CHECK(same.visible_transfers() == full.visible_transfers());
}

TEST_CASE("restrictions to levels") {
    auto T = burnside(6);
    auto V = restrict_levels(T, {1, 2, 3});
    CHECK(V.levels == std::vector<int>{1, 2, 3});
    CHECK(V.bottom() == 1);
    CHECK(V.alg(2).rank() == 2);
    CHECK_FALSE(V.has_level(6));
    auto comps = path_components(parse_system(cyclic_lattice(4), "O2"));
    for (const auto& c : comps) {
        auto R = restrict_component(forget_pair(burnside(4), named_pair(4, "O2", "O2")), c);
        CHECK(R.levels == c.members);
    }
}
