#include "tambara/construct.hpp"
#include "tambara/ideal.hpp"
#include "tambara/kernels.hpp"

#include <doctest.h>

#include <omp.h>

using namespace tambara;

namespace {

DiagramPtr at_pair(const LewisDiagram& full, const std::string& om, const std::string& oa) {
    auto lat = full.lattice;
    auto pr = make_compatible_pair(parse_system(lat, om), parse_system(lat, oa));
    return std::make_shared<LewisDiagram>(forget_pair(full, pr));
}

TambaraIdeal ideal(DiagramPtr T, const std::map<int, std::string>& gens, long q, long p) {
    std::map<int, Mat> m;
    for (const auto& [d, text] : gens) {
        Mat rows;
        for (const auto& g : parse_generators(T->alg(d), text, Int(p))) rows.push_back(g.eval(Int(q)));
        m[d] = rows;
    }
    return levelwise_ideal(T, m);
}

// common-level products res(x) * res(y), the whole story without norms
bool brute_q_trivial(const TambaraIdeal& I, int H1, const Vec& x, int H2, const Vec& y) {
    const auto& T = *I.diagram;
    for (int L : T.levels) {
        if (H1 % L || H2 % L) continue;
        long w = T.lattice.weyl_order(L);
        Vec a = T.res(L, H1, x), b = T.res(L, H2, y);
        for (long g = 0; g < w; ++g)
            for (long h = 0; h < w; ++h)
                if (!I.at(L).member(T.alg(L).mul(T.conj(L, g, a), T.conj(L, h, b)))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("ideal closure checks") {
    auto full = burnside_cp2(2);
    auto T = at_pair(full, "Ocomp", "Ocomp");
    auto C3 = ideal(T, {{4, "q,t-p,u-p*t"}, {2, "q,t-p"}, {1, "q"}}, 3, 2);
    CHECK_FALSE(is_ideal(C3));
    auto Tt = at_pair(full, "Otriv", "Ocomp");
    auto B1 = ideal(Tt, {{4, "q,t-p,u"}, {2, "1"}, {1, "1"}}, 3, 2);
    auto v = is_ideal(B1);
    REQUIRE(v);
    CHECK(v->map == "tr");
    CHECK(v->K == 2);
    CHECK(v->H == 4);
    CHECK(is_ideal(zero_ideal(T)) == std::nullopt);
    CHECK(is_ideal(unit_ideal(T)) == std::nullopt);
    auto g = generate(T, {{2, to_mat({{3, 0}})}});
    CHECK_FALSE(is_ideal(g));
    CHECK(g.at(4).member(to_vec({3, 0, 0})));
    CHECK(g.at(1).member(to_vec({3})));
}

TEST_CASE("generalized products and the Q-condition") {
    auto full = burnside_cp2(2);
    auto T3 = at_pair(full, "O3", "Ocomp");
    Vec x = to_vec({0, 2, -1}), y = to_vec({2, -1, 0}); // pt - u, p - t
    for (const auto& tr : generalized_products(*T3, 4, x, 4, y)) CHECK(is_zero(tr.value));
    auto Q = ideal(T3, {{4, "q"}, {2, "q"}, {1, "q"}}, 3, 2);
    CHECK(q_condition(Q, 4, x, 4, y));
    CHECK_FALSE(Q.at(4).member(x));
    CHECK_FALSE(Q.at(4).member(y));
    CHECK(q_condition(unit_ideal(T3), 4, x, 4, y));

    auto Tt = at_pair(full, "Otriv", "Otriv");
    auto I = ideal(Tt, {{4, "q,t"}, {2, "q"}, {1, "q"}}, 3, 2);
    for (const auto& a : box_elements(3, 1))
        for (const auto& b : box_elements(2, 1))
            CHECK(q_condition(I, 4, a, 2, b) == brute_q_trivial(I, 4, a, 2, b));

    auto C6 = std::make_shared<LewisDiagram>(
        forget_pair(burnside(6), make_compatible_pair(parse_system(cyclic_lattice(6), "(1,2),(1,3)"),
                                                      parse_system(cyclic_lattice(6), "(1,2),(1,3)"))));
    Vec xp = to_vec({-2, 1}), xq = to_vec({-3, 1});
    bool bottom_zero = false;
    for (const auto& tr : generalized_products(*C6, 2, xp, 3, xq))
        if (tr.level == 1 && is_zero(tr.value)) bottom_zero = true;
    CHECK(bottom_zero);
    auto V = std::make_shared<LewisDiagram>(restrict_levels(*C6, {1, 2, 3}));
    auto r5 = ideal(V, {{3, "q"}, {2, "q"}, {1, "q"}}, 5, 2);
    CHECK(q_condition(r5, 2, xp, 3, xq));
}

TEST_CASE("refuting primality") {
    auto full = burnside_cp2(2);
    auto T3 = at_pair(full, "O3", "Ocomp");
    auto Q = ideal(T3, {{4, "q"}, {2, "q"}, {1, "q"}}, 3, 2);
    auto w = refute_primality(Q, {3, true});
    REQUIRE(w);
    CHECK(q_condition(Q, w->H1, w->x, w->H2, w->y));
    CHECK_FALSE(Q.at(w->H1).member(w->x));
    CHECK_FALSE(Q.at(w->H2).member(w->y));

    auto Z = std::make_shared<LewisDiagram>(constant_Z(2));
    auto A = ideal(Z, {{2, "q"}, {1, "q"}}, 3, 2);
    CHECK_FALSE(refute_primality(A, {3, true}));
    CHECK_THROWS(refute_primality(unit_ideal(Z)));
}

TEST_CASE("serial and parallel refutation agree") {
    auto full = burnside_cp2(2);
    for (const char* om : {"Otriv", "O1", "O3", "Ocomp"}) {
        auto T = at_pair(full, om, "Ocomp");
        for (long q : {0L, 2L, 3L}) {
            std::vector<TambaraIdeal> cands = {ideal(T, {{4, "q"}, {2, "q"}, {1, "q"}}, q, 2),
                                               ideal(T, {{4, "q,t-p"}, {2, "q"}, {1, "q"}}, q, 2),
                                               ideal(T, {{4, "q,u"}, {2, "q,t"}, {1, "q"}}, q, 2)};
            for (const auto& I : cands) {
                if (!I.proper()) continue;
                auto s = refute_primality_serial(I, {2, true});
                for (int threads : {1, 2, 4}) {
                    omp_set_num_threads(threads);
                    auto p = refute_primality_parallel(I, {2, true});
                    REQUIRE(s.has_value() == p.has_value());
                    if (s) {
                        CHECK(s->H1 == p->H1);
                        CHECK(s->H2 == p->H2);
                        CHECK(s->x == p->x);
                        CHECK(s->y == p->y);
                    }
                }
            }
        }
    }
}

TEST_CASE("component extension") {
    auto full = burnside_cp2(2);
    auto T = at_pair(full, "O1", "O1");
    auto sub = std::make_shared<LewisDiagram>(restrict_levels(*T, {1, 2}));
    auto J = ideal(sub, {{2, "q"}, {1, "q"}}, 3, 2);
    auto I = extend_component_prime(T, J);
    CHECK(I.at(4) == ideal_from_generators(T->alg_ptr(4), to_mat({{3, 0, 0}, {-2, 1, 0}})));
    CHECK(I.at(2) == J.at(2));
    auto J2 = ideal(sub, {{2, "q,t-p"}, {1, "q"}}, 3, 2);
    CHECK(extend_component_prime(T, J2).at(4) ==
          ideal_from_generators(T->alg_ptr(4), to_mat({{3, 0, 0}, {-2, 1, 0}, {0, -2, 1}})));
    auto top = std::make_shared<LewisDiagram>(restrict_levels(*T, {4}));
    auto A = ideal(top, {{4, "q,t,u"}}, 3, 2);
    auto IA = extend_component_prime(T, A);
    CHECK(IA.at(2).is_unit_ideal());
    CHECK(IA.at(1).is_unit_ideal());
    CHECK(IA.at(4) == A.at(4));
}

TEST_CASE("G-prime witnesses and radical audit") {
    auto Z = integers();
    Submodule three = ideal_from_generators(Z, {Vec{Int(3)}});
    CHECK_FALSE(is_g_prime_witness(*Z, identity_mat(1), three, Vec{Int(1)}, Vec{Int(1)}));
    CHECK(is_g_prime_witness(*Z, identity_mat(1), ideal_from_generators(Z, {Vec{Int(6)}}), Vec{Int(2)}, Vec{Int(3)}));

    auto T = burnside_cp2(2);
    auto A = T.alg_ptr(4);
    Submodule tp = ideal_from_generators(A, to_mat({{-2, 1, 0}}));
    auto w = find_g_prime_witness(*A, identity_mat(3), tp, 3);
    REQUIRE(w);
    CHECK(is_g_prime_witness(*A, identity_mat(3), tp, w->first, w->second));

    auto D = std::make_shared<LewisDiagram>(T);
    auto C3 = ideal(D, {{4, "q,t-p,u-p*t"}, {2, "q,t-p"}, {1, "q"}}, 3, 2);
    CHECK_FALSE(radical_audit(C3, 3));
    auto Zd = std::make_shared<LewisDiagram>(constant_Z(3));
    auto sq = levelwise_ideal(Zd, {{3, to_mat({{9}})}, {1, to_mat({{9}})}});
    auto r = radical_audit(sq, 3);
    REQUIRE(r);
    CHECK(r->x == to_vec({3}));
    CHECK_FALSE(radical_audit(unit_ideal(Zd), 3));
}

TEST_CASE("box order") {
    auto b = box_elements(2, 1);
    REQUIRE(b.size() == 9);
    CHECK(b[0] == to_vec({0, 0}));
    CHECK(b[1] == to_vec({0, 1}));
    CHECK(b[2] == to_vec({0, -1}));
    CHECK(b[3] == to_vec({1, 0}));
    CHECK(b.back() == to_vec({-1, -1}));
}
