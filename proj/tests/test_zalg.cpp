#include "tambara/construct.hpp"
#include "tambara/zalg.hpp"

#include <doctest.h>

#include <random>

using namespace tambara;

namespace {

// Bareiss determinant on 128-bit integers, independent of the HNF code
__int128 det(std::vector<std::vector<__int128>> a) {
    size_t n = a.size();
    __int128 sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

AlgebraPtr free_module(size_t n) {
    AlgebraPtr a = integers();
    for (size_t i = 1; i < n; ++i) a = product_algebra(a, integers());
    return a;
}

} // namespace

TEST_CASE("HNF diagonal product and Smith invariants give |det|") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> e(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 1 + trial % 4;
        Mat m(n, Vec(n));
        std::vector<std::vector<__int128>> raw(n, std::vector<__int128>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                int v = e(rng);
                m[i][j] = Int(v);
                raw[i][j] = v;
            }
        __int128 d = det(raw);
        if (d < 0) d = -d;
        Mat h = hnf(m, n);
        if (d == 0) {
            CHECK(h.size() < n);
            continue;
        }
        REQUIRE(h.size() == n);
        Int prod(1), sprod(1);
        for (size_t i = 0; i < n; ++i) {
            prod *= h[i][i];
            for (size_t j = 0; j < i; ++j) CHECK(h[i][j].is_zero());
            for (size_t k = 0; k < i; ++k) CHECK((h[k][i] >= Int(0) && h[k][i] < h[i][i]));
        }
        for (const auto& x : smith(m, n).diagonal) sprod *= x;
        CHECK(prod == Int(static_cast<long long>(d)));
        CHECK(sprod == Int(static_cast<long long>(d)));
        auto sd = smith(m, n).diagonal;
        for (size_t i = 1; i < sd.size(); ++i) CHECK(divides(sd[i - 1], sd[i]));
    }
}

TEST_CASE("left kernel annihilates") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> e(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 3;
        Mat m(r, Vec(c));
        for (auto& row : m)
            for (auto& x : row) x = Int(e(rng));
        Mat k = left_kernel(m, r, c);
        for (const auto& v : k) {
            Vec out = zero_vec(c);
            for (size_t i = 0; i < r; ++i) out = out + v[i] * m[i];
            CHECK(is_zero(out));
        }
        CHECK(k.size() + hnf(m, c).size() == r);
    }
}

TEST_CASE("submodule operations on a free module") {
    auto Z3 = free_module(3);
    Submodule a(Z3, to_mat({{2, 0, 0}, {0, 3, 0}}));
    Submodule b(Z3, to_mat({{4, 0, 0}, {0, 1, 0}}));
    CHECK(intersect(a, b) == Submodule(Z3, to_mat({{4, 0, 0}, {0, 3, 0}})));
    CHECK(sum(a, b) == Submodule(Z3, to_mat({{2, 0, 0}, {0, 1, 0}})));
    CHECK(a.member(to_vec({6, -9, 0})));
    CHECK_FALSE(a.member(to_vec({1, 0, 0})));
    auto c = a.coordinates(to_vec({6, -9, 0}));
    REQUIRE(c);
    CHECK(*c == to_vec({3, -3}));
    CHECK(b.contains(Submodule(Z3, to_mat({{8, 5, 0}}))));
}

TEST_CASE("Burnside ring of C_{p^2} multiplication and restriction preimage") {
    auto T = burnside_cp2(2);
    const Algebra& A = T.alg(4);
    Vec t = A.basis(1), u = A.basis(2);
    CHECK(A.mul(t, t) == A.scale(Int(2), t));
    CHECK(A.mul(t, u) == A.scale(Int(2), u));
    CHECK(A.mul(u, u) == A.scale(Int(4), u));
    CHECK(!check_algebra(A));
    // preimage of <3> under res_2^4: res(t) = 2, res(u) = 2t
    auto B = T.alg_ptr(2);
    Submodule three = ideal_from_generators(B, {B->scalar(Int(3))});
    auto pre = preimage(T.res_map(2, 4), three);
    Submodule want(T.alg_ptr(4), to_mat({{3, 0, 0}, {-2, 1, 0}, {0, 0, 3}}));
    CHECK(pre == want);
    CHECK_FALSE(pre.member(to_vec({0, -4, 1}))); // u - 2t maps to 2t - 4 = 2(t-2), not in <3>
}

TEST_CASE("quotients, fixed subrings and products") {
    auto T = burnside_cp(3);
    AlgebraPtr A = T.alg_ptr(3);
    Submodule tr_image = image(T.tr_map(1, 3), Submodule::whole(T.alg_ptr(1)));
    auto Q = quotient_algebra(tr_image);
    CHECK(Q.algebra->rank() == 1);
    CHECK(Q.map(A->basis(1)) == Q.algebra->zero());
    auto F = fixed_subring(A, identity_mat(A->rank()));
    CHECK(F.algebra->rank() == A->rank());
    auto P = product_algebra(A, integers());
    CHECK(P->rank() == 3);
    CHECK(!check_algebra(*P));
    Submodule mod6 = ideal_from_generators(integers(), {Vec{Int(6)}});
    auto Z6 = quotient_algebra(mod6);
    CHECK(Z6.algebra->has_torsion());
    CHECK(Z6.algebra->reduce(Vec{Int(13)}) == Vec{Int(1)});
}

TEST_CASE("symbolic generators") {
    auto T = burnside_cp2(3);
    const Algebra& A = T.alg(9);
    auto g = parse_generators(A, "q, t-p, u-p^2", Int(3));
    REQUIRE(g.size() == 3);
    CHECK(g[0].eval(Int(5)) == to_vec({5, 0, 0}));
    CHECK(g[1].eval(Int(5)) == to_vec({-3, 1, 0}));
    CHECK(g[2].eval(Int(0)) == to_vec({-9, 0, 1}));
    CHECK(parse_element(A, "u - p*t", Int(3)).eval(Int(2)) == to_vec({0, -3, 1}));
    CHECK_THROWS(parse_element(A, "w + 1", Int(3)));
    auto unit = ideal_from_generators(T.alg_ptr(9), {parse_generators(A, "1", Int(3))[0].eval(Int(0))});
    CHECK(unit.is_unit_ideal());
}

TEST_CASE("kernel and image of restriction") {
    auto T = burnside_cp(2);
    auto k = kernel(T.res_map(1, 2));
    CHECK(k == Submodule(T.alg_ptr(2), to_mat({{-2, 1}})));
    auto im = image(T.res_map(1, 2), Submodule::whole(T.alg_ptr(2)));
    CHECK(im.is_unit_ideal());
}
