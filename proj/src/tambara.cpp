#include "tambara/tambara.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tambara {

const Algebra& LewisDiagram::alg(int d) const { return *alg_ptr(d); }

AlgebraPtr LewisDiagram::alg_ptr(int d) const {
    auto it = level.find(d);
    if (it == level.end()) throw std::out_of_range("no level " + std::to_string(d));
    return it->second;
}

bool LewisDiagram::has_res(int K, int H) const { return K == H ? has_level(K) : res_all.count({K, H}) > 0; }

bool LewisDiagram::has_tr(int K, int H) const {
    if (!has_level(K) || !has_level(H)) return false;
    if (K == H) return true;
    return pair.add.contains(K, H) && tr_all.count({K, H}) > 0;
}

bool LewisDiagram::has_nm(int K, int H) const {
    if (!has_level(K) || !has_level(H)) return false;
    if (K == H) return true;
    return pair.mult.contains(K, H) && nm_all.count({K, H}) > 0;
}

Vec LewisDiagram::res(int K, int H, const Vec& x) const {
    if (K == H) return x;
    auto it = res_all.find({K, H});
    if (it == res_all.end()) throw std::out_of_range("no restriction " + std::to_string(H) + "->" + std::to_string(K));
    const Algebra& a = alg(K);
    return a.reduce(apply(it->second, x, a.rank()));
}

Vec LewisDiagram::tr(int K, int H, const Vec& x) const {
    if (K == H) return x;
    if (!has_tr(K, H)) throw std::out_of_range("transfer " + std::to_string(K) + "->" + std::to_string(H) + " not admissible");
    const Algebra& a = alg(H);
    return a.reduce(apply(tr_all.at({K, H}), x, a.rank()));
}

Vec LewisDiagram::nm(int K, int H, const Vec& x) const {
    if (K == H) return x;
    if (!has_nm(K, H)) throw std::out_of_range("norm " + std::to_string(K) + "->" + std::to_string(H) + " not admissible");
    return alg(H).reduce(nm_all.at({K, H}).fn(x));
}

Vec LewisDiagram::conj(int d, long k, const Vec& x) const {
    auto it = weyl.find(d);
    if (it == weyl.end()) return x;
    long order = lattice.n / d;
    k %= order;
    if (k < 0) k += order;
    const Algebra& a = alg(d);
    Vec v = x;
    for (long i = 0; i < k; ++i) v = a.reduce(apply(it->second, v, a.rank()));
    return v;
}

bool LewisDiagram::trivial_action(int d) const {
    auto it = weyl.find(d);
    return it == weyl.end() || it->second == identity_mat(alg(d).rank());
}

LinearMap LewisDiagram::res_map(int K, int H) const {
    if (K == H) return {alg_ptr(K), alg_ptr(K), identity_mat(alg(K).rank())};
    return {alg_ptr(H), alg_ptr(K), res_all.at({K, H})};
}

LinearMap LewisDiagram::tr_map(int K, int H) const {
    if (K == H) return {alg_ptr(K), alg_ptr(K), identity_mat(alg(K).rank())};
    if (!has_tr(K, H)) throw std::out_of_range("transfer not admissible");
    return {alg_ptr(K), alg_ptr(H), tr_all.at({K, H})};
}

std::vector<Edge> LewisDiagram::visible_transfers() const {
    std::vector<Edge> out;
    for (const auto& [e, m] : tr_all)
        if (has_tr(e.first, e.second)) out.push_back(e);
    return out;
}

std::vector<Edge> LewisDiagram::visible_norms() const {
    std::vector<Edge> out;
    for (const auto& [e, m] : nm_all)
        if (has_nm(e.first, e.second)) out.push_back(e);
    return out;
}

Vec random_element(const Algebra& a, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    Vec v(a.rank());
    for (auto& x : v) x = Int(dist(rng));
    return a.reduce(std::move(v));
}

namespace {

std::string fmt_edge(int K, int H) { return "(" + std::to_string(K) + "," + std::to_string(H) + ")"; }

CheckFailure fail(const std::string& check, const std::string& detail) { return {check, detail}; }

} // namespace

CheckResult check_structure(const LewisDiagram& T, const SampleOptions& opt) {
    for (int d : T.levels)
        if (auto e = check_algebra(T.alg(d))) return fail("algebra", "level " + std::to_string(d) + ": " + *e);
    for (const auto& [e, m] : T.res_all) {
        auto [K, H] = e;
        const Algebra& A = T.alg(H);
        if (!T.alg(K).equal(T.res(K, H, A.unit), T.alg(K).unit)) return fail("res unital", fmt_edge(K, H));
        for (size_t i = 0; i < A.rank(); ++i)
            for (size_t j = 0; j < A.rank(); ++j) {
                Vec lhs = T.res(K, H, A.mul(A.basis(i), A.basis(j)));
                Vec rhs = T.alg(K).mul(T.res(K, H, A.basis(i)), T.res(K, H, A.basis(j)));
                if (!T.alg(K).equal(lhs, rhs)) return fail("res multiplicative", fmt_edge(K, H));
            }
    }
    // functoriality along chains K < L < H
    std::mt19937_64 rng(opt.seed);
    for (int K : T.levels)
        for (int L : T.levels)
            for (int H : T.levels) {
                if (K == L || L == H || L % K != 0 || H % L != 0) continue;
                const Algebra& AH = T.alg(H);
                for (size_t i = 0; i < AH.rank(); ++i)
                    if (!T.alg(K).equal(T.res(K, L, T.res(L, H, AH.basis(i))), T.res(K, H, AH.basis(i))))
                        return fail("res functorial", fmt_edge(K, H) + " via " + std::to_string(L));
                const Algebra& AK = T.alg(K);
                if (T.has_tr(K, L) && T.has_tr(L, H) && T.has_tr(K, H))
                    for (size_t i = 0; i < AK.rank(); ++i)
                        if (!AH.equal(T.tr(L, H, T.tr(K, L, AK.basis(i))), T.tr(K, H, AK.basis(i))))
                            return fail("tr functorial", fmt_edge(K, H) + " via " + std::to_string(L));
                if (T.has_nm(K, L) && T.has_nm(L, H) && T.has_nm(K, H))
                    for (size_t s = 0; s < opt.samples; ++s) {
                        Vec x = random_element(AK, rng, opt.bound);
                        if (!AH.equal(T.nm(L, H, T.nm(K, L, x)), T.nm(K, H, x)))
                            return fail("nm functorial", fmt_edge(K, H) + " via " + std::to_string(L) + " at x=" + AK.format(x));
                    }
            }
    for (const auto& [e, nmap] : T.nm_all) {
        auto [K, H] = e;
        const Algebra& AK = T.alg(K);
        const Algebra& AH = T.alg(H);
        if (!AH.equal(T.nm_all.at(e).fn(AK.unit), AH.unit)) return fail("nm unital", fmt_edge(K, H));
        for (size_t s = 0; s < opt.samples; ++s) {
            Vec x = random_element(AK, rng, opt.bound), y = random_element(AK, rng, opt.bound);
            const auto& f = nmap.fn;
            if (!AH.equal(f(AK.mul(x, y)), AH.mul(f(x), f(y))))
                return fail("nm multiplicative", fmt_edge(K, H) + " at x=" + AK.format(x) + ", y=" + AK.format(y));
        }
    }
    for (const auto& [d, A] : T.weyl) {
        const Algebra& a = T.alg(d);
        long order = T.lattice.n / d;
        for (size_t i = 0; i < a.rank(); ++i)
            if (!a.equal(T.conj(d, order, a.basis(i)), a.basis(i)))
                return fail("weyl order", "level " + std::to_string(d));
        for (size_t i = 0; i < a.rank(); ++i)
            for (size_t j = 0; j < a.rank(); ++j)
                if (!a.equal(T.conj(d, 1, a.mul(a.basis(i), a.basis(j))), a.mul(T.conj(d, 1, a.basis(i)), T.conj(d, 1, a.basis(j)))))
                    return fail("weyl multiplicative", "level " + std::to_string(d));
    }
    return std::nullopt;
}

CheckResult check_frobenius(const LewisDiagram& T, const SampleOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    for (auto [K, H] : T.visible_transfers()) {
        const Algebra& AK = T.alg(K);
        const Algebra& AH = T.alg(H);
        for (size_t s = 0; s < opt.samples; ++s) {
            Vec x = random_element(AK, rng, opt.bound);
            Vec y = random_element(AH, rng, opt.bound);
            Vec lhs = AH.mul(T.tr(K, H, x), y);
            Vec rhs = T.tr(K, H, AK.mul(x, T.res(K, H, y)));
            if (!AH.equal(lhs, rhs))
                return fail("frobenius", fmt_edge(K, H) + " x=" + AK.format(x) + " y=" + AH.format(y));
        }
    }
    return std::nullopt;
}

CheckResult check_double_coset(const LewisDiagram& T, const SampleOptions& opt) {
    std::mt19937_64 rng(opt.seed + 1);
    auto run = [&](bool multiplicative) -> CheckResult {
        auto edges = multiplicative ? T.visible_norms() : T.visible_transfers();
        for (auto [K, H] : edges)
            for (int L : T.levels) {
                if (H % L != 0) continue;
                int M = std::gcd(L, K);
                if (!T.has_level(M)) continue;
                if (multiplicative ? !T.has_nm(M, L) : !T.has_tr(M, L)) continue;
                long cosets = H / std::lcm(L, K);
                long step = T.lattice.n / H;
                const Algebra& AK = T.alg(K);
                const Algebra& AL = T.alg(L);
                for (size_t s = 0; s < opt.samples; ++s) {
                    Vec x = random_element(AK, rng, opt.bound);
                    Vec lhs = T.res(L, H, multiplicative ? T.nm(K, H, x) : T.tr(K, H, x));
                    Vec rhs = multiplicative ? AL.unit : AL.zero();
                    for (long i = 0; i < cosets; ++i) {
                        Vec term = T.conj(M, step * i, T.res(M, K, x));
                        term = multiplicative ? T.nm(M, L, term) : T.tr(M, L, term);
                        rhs = multiplicative ? AL.mul(rhs, term) : AL.add(rhs, term);
                    }
                    if (!AL.equal(lhs, rhs))
                        return fail(multiplicative ? "double coset (nm)" : "double coset (tr)",
                                    "L=" + std::to_string(L) + " " + fmt_edge(K, H) + " x=" + AK.format(x));
                }
            }
        return std::nullopt;
    };
    if (auto r = run(false)) return r;
    return run(true);
}

CheckResult check_tambara_reciprocity(const LewisDiagram& T, const SampleOptions& opt) {
    std::mt19937_64 rng(opt.seed + 2);
    for (auto [K, H] : T.visible_norms()) {
        if (K == H) continue;
        const Algebra& AK = T.alg(K);
        const Algebra& AH = T.alg(H);
        Submodule images = Submodule::zero(T.alg_ptr(H));
        for (int L : T.levels) {
            if (L == H || H % L != 0) continue;
            if (!T.has_tr(L, H)) continue;
            images = sum(images, image(T.tr_map(L, H), Submodule::whole(T.alg_ptr(L))));
        }
        for (size_t s = 0; s < opt.samples; ++s) {
            Vec x = random_element(AK, rng, opt.bound), y = random_element(AK, rng, opt.bound);
            Vec d = AH.sub(AH.sub(T.nm(K, H, AK.add(x, y)), T.nm(K, H, x)), T.nm(K, H, y));
            if (!images.member(d))
                return fail("tambara reciprocity", fmt_edge(K, H) + " x=" + AK.format(x) + " y=" + AK.format(y));
        }
    }
    return std::nullopt;
}

CheckResult check_axioms(const LewisDiagram& T, const SampleOptions& opt) {
    if (auto r = check_structure(T, opt)) return r;
    if (auto r = check_frobenius(T, opt)) return r;
    if (auto r = check_double_coset(T, opt)) return r;
    return check_tambara_reciprocity(T, opt);
}

CohomologicalReport cohomological(const LewisDiagram& T) {
    CohomologicalReport rep;
    for (const auto& [e, m] : T.tr_all) {
        auto [K, H] = e;
        if (!T.has_level(K) || !T.has_level(H)) continue;
        const Algebra& AH = T.alg(H);
        Int index(H / K);
        for (size_t i = 0; i < AH.rank() && !rep.additive_failure; ++i) {
            Vec x = AH.basis(i);
            Vec lhs = AH.reduce(apply(m, T.res(K, H, x), AH.rank()));
            if (!AH.equal(lhs, AH.scale(index, x)))
                rep.additive_failure = CohomologicalWitness{K, H, x, "tr(res(" + AH.format(x) + ")) = " + AH.format(lhs)};
        }
        if (rep.additive_failure) break;
    }
    for (const auto& [e, nmap] : T.nm_all) {
        auto [K, H] = e;
        if (!T.has_level(K) || !T.has_level(H)) continue;
        const Algebra& AH = T.alg(H);
        unsigned index = static_cast<unsigned>(H / K);
        std::vector<Vec> candidates;
        for (size_t i = 0; i < AH.rank(); ++i) candidates.push_back(AH.basis(i));
        // bounded grid of small elements
        size_t r = AH.rank();
        size_t total = 1;
        for (size_t i = 0; i < r; ++i) total *= 5;
        for (size_t code = 0; code < total && r <= 4; ++code) {
            Vec v(r);
            size_t c = code;
            for (size_t i = 0; i < r; ++i, c /= 5) v[i] = Int(static_cast<long long>(c % 5) - 2);
            candidates.push_back(AH.reduce(v));
        }
        for (const auto& x : candidates) {
            Vec lhs = AH.reduce(nmap.fn(T.res(K, H, x)));
            Vec rhs = AH.pow(x, index);
            if (!AH.equal(lhs, rhs)) {
                rep.multiplicative_failure =
                    CohomologicalWitness{K, H, x, "nm(res(" + AH.format(x) + ")) = " + AH.format(lhs) + " but x^" + std::to_string(index) + " = " + AH.format(rhs)};
                break;
            }
        }
        if (rep.multiplicative_failure) break;
    }
    return rep;
}

LewisDiagram forget_pair(const LewisDiagram& T, const CompatiblePair& sub) {
    if (!is_compatible_pair(sub.mult, sub.add)) throw std::invalid_argument("forget_pair: not a compatible pair");
    if (!sub.mult.subset_of(T.pair.mult) || !sub.add.subset_of(T.pair.add))
        throw std::invalid_argument("forget_pair: not a sub-pair of " + pair_name(T.pair));
    LewisDiagram out = T;
    out.pair = sub;
    return out;
}

LewisDiagram with_pair(const LewisDiagram& T, const CompatiblePair& pr) {
    if (!is_compatible_pair(pr.mult, pr.add)) throw std::invalid_argument("with_pair: not a compatible pair");
    for (auto [K, H] : pr.add.nontrivial_pairs())
        if (T.has_level(K) && T.has_level(H) && !T.tr_all.count({K, H}))
            throw std::invalid_argument("with_pair: no transfer " + fmt_edge(K, H) + " stored");
    for (auto [K, H] : pr.mult.nontrivial_pairs())
        if (T.has_level(K) && T.has_level(H) && !T.nm_all.count({K, H}))
            throw std::invalid_argument("with_pair: no norm " + fmt_edge(K, H) + " stored");
    LewisDiagram out = T;
    out.pair = pr;
    return out;
}

LewisDiagram restrict_levels(const LewisDiagram& T, const std::vector<int>& keep) {
    LewisDiagram out;
    out.lattice = T.lattice;
    out.pair = T.pair;
    out.construction = T.construction;
    out.levels = keep;
    std::sort(out.levels.begin(), out.levels.end());
    auto kept = [&](int d) { return std::find(out.levels.begin(), out.levels.end(), d) != out.levels.end(); };
    for (int d : out.levels) {
        out.level[d] = T.alg_ptr(d);
        if (T.weyl.count(d)) out.weyl[d] = T.weyl.at(d);
    }
    for (const auto& [e, m] : T.res_all)
        if (kept(e.first) && kept(e.second)) out.res_all[e] = m;
    for (const auto& [e, m] : T.tr_all)
        if (kept(e.first) && kept(e.second)) out.tr_all[e] = m;
    for (const auto& [e, m] : T.nm_all)
        if (kept(e.first) && kept(e.second)) out.nm_all[e] = m;
    return out;
}

LewisDiagram restrict_component(const LewisDiagram& T, const PathComponent& component) {
    if (!is_compatible_pair(T.pair.mult, T.pair.mult) || !is_saturated(T.pair.mult))
        throw std::invalid_argument("restrict_component: pair is not self-compatible");
    auto comps = path_components(T.pair.mult);
    bool found = std::any_of(comps.begin(), comps.end(), [&](const PathComponent& c) { return c.members == component.members; });
    if (!found) throw std::invalid_argument("restrict_component: not a path component");
    return restrict_levels(T, component.members);
}

} // namespace tambara
