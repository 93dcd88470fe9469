#include "tambara/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace tambara {

namespace {

std::vector<int> divisors(int d) {
    std::vector<int> out;
    for (int k = 1; k <= d; ++k)
        if (d % k == 0) out.push_back(k);
    return out;
}

// basis of A(C_d): stabilizers K ordered by increasing index d/K
std::vector<int> orbit_basis(int d) {
    auto ks = divisors(d);
    std::reverse(ks.begin(), ks.end());
    return ks;
}

std::string orbit_name(int n, int index) {
    if (index == 1) return "1";
    auto f = prime_factors(n);
    if (f.size() == 1) {
        static const char* letters[] = {"t", "u", "v", "w", "s"};
        int k = 0;
        for (long x = index; x > 1; x /= f[0]) ++k;
        if (k <= 5) return letters[k - 1];
    }
    return "x_" + std::to_string(index);
}

struct Marks {
    int d;
    std::vector<int> Ks; // basis stabilizers

    size_t pos(int K) const { return static_cast<size_t>(std::find(Ks.begin(), Ks.end(), K) - Ks.begin()); }

    // phi_L(x) for each L | d, keyed by L
    std::map<int, Int> of(const Vec& x) const {
        std::map<int, Int> out;
        for (int L : divisors(d)) {
            Int s(0);
            for (size_t i = 0; i < Ks.size(); ++i)
                if (Ks[i] % L == 0) s += x[i] * Int(d / Ks[i]);
            out[L] = s;
        }
        return out;
    }

    Vec from(const std::map<int, Int>& phi) const {
        Vec c = zero_vec(Ks.size());
        auto ds = divisors(d);
        for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
            int L = *it;
            Int rest = phi.at(L);
            for (int K : ds)
                if (K != L && K % L == 0) rest -= c[pos(K)] * Int(d / K);
            c[pos(L)] = exact_div(rest, Int(d / L));
        }
        return c;
    }
};

AlgebraPtr burnside_algebra(int n, int d) {
    auto Ks = orbit_basis(d);
    size_t r = Ks.size();
    std::vector<std::string> names;
    for (int K : Ks) names.push_back(orbit_name(n, d / K));
    Marks mk{d, Ks};
    std::vector<std::vector<Vec>> mult(r, std::vector<Vec>(r, zero_vec(r)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            int g = std::gcd(Ks[i], Ks[j]);
            long copies = static_cast<long>(d / Ks[i]) * (d / Ks[j]) / (d / g);
            mult[i][j][mk.pos(g)] = Int(copies);
        }
    std::vector<Character> chars;
    for (int L : divisors(d)) {
        Character c{"phi_" + std::to_string(L), {}, Int(0)};
        for (int K : Ks) c.values.push_back(Int(K % L == 0 ? d / K : 0));
        chars.push_back(std::move(c));
    }
    std::string name = "A(" + subgroup_label(d) + ")";
    if (d == 1) name = "Z";
    return make_algebra(name, names, mult, unit_vec(r, 0), chars);
}

Vec burnside_norm(int e, int d, const Vec& x) {
    Marks src{e, orbit_basis(e)}, dst{d, orbit_basis(d)};
    auto phi = src.of(x);
    std::map<int, Int> out;
    for (int L : divisors(d)) out[L] = pow(phi.at(std::gcd(L, e)), static_cast<unsigned>(d / std::lcm(L, e)));
    return dst.from(out);
}

} // namespace

LewisDiagram burnside(int n) {
    LewisDiagram T;
    T.lattice = cyclic_lattice(n);
    T.pair = {complete_system(T.lattice), complete_system(T.lattice)};
    T.levels = T.lattice.subgroups;
    T.construction = "burnside:order=" + std::to_string(n);
    for (int d : T.levels) {
        T.level[d] = burnside_algebra(n, d);
        T.weyl[d] = identity_mat(T.level[d]->rank());
    }
    for (int e : T.levels)
        for (int d : T.levels) {
            if (e == d || d % e != 0) continue;
            auto Kd = orbit_basis(d), Ke = orbit_basis(e);
            Marks me{e, Ke}, md{d, Kd};
            Mat res;
            for (int K : Kd) {
                Vec v = zero_vec(Ke.size());
                int g = std::gcd(e, K);
                v[me.pos(g)] = Int(static_cast<long>(d / K) / (e / g));
                res.push_back(v);
            }
            T.res_all[{e, d}] = res;
            Mat tr;
            for (int K : Ke) tr.push_back(unit_vec(Kd.size(), md.pos(K)));
            T.tr_all[{e, d}] = tr;
            T.nm_all[{e, d}] = NormMap{[e, d](const Vec& x) { return burnside_norm(e, d, x); }, "marks"};
        }
    return T;
}

LewisDiagram burnside_cp(long p) {
    if (!is_prime(p)) throw std::invalid_argument("burnside: p must be prime");
    auto T = burnside(static_cast<int>(p));
    T.construction = "burnside:p=" + std::to_string(p);
    return T;
}

LewisDiagram burnside_cp2(long p) {
    if (!is_prime(p)) throw std::invalid_argument("burnside: p must be prime");
    auto T = burnside(static_cast<int>(p * p));
    T.construction = "burnside:p=" + std::to_string(p) + ",n=2";
    return T;
}

LewisDiagram burnside_cpq(long p, long q) {
    if (!is_prime(p) || !is_prime(q) || p == q) throw std::invalid_argument("burnside: need distinct primes p, q");
    auto T = burnside(static_cast<int>(p * q));
    T.construction = "burnside:pq=" + std::to_string(p) + "," + std::to_string(q);
    return T;
}

Vec mazur_norm(long p, const Int& a, const Int& b) {
    // basis 1, t, u of A(C_{p^2}); t u = p u, u = tr(t), t^j = p^{j-1} t
    Int P(p);
    unsigned up = static_cast<unsigned>(p);
    auto nm_p = [&](const Int& k) { return std::pair<Int, Int>{k, exact_div(pow(k, up) - k, P)}; };
    Vec out = zero_vec(3);
    auto [a0, a1] = nm_p(a);
    out[0] += a0;
    out[1] += a1;
    // nm(b) p^{p-2} u, with t u = p u
    auto [b0, b1] = nm_p(b);
    out[2] += (b0 + b1 * P) * pow(P, up - 2);
    // sum over 0 < j < p of (C(p,j)/p) tr(a^{p-j} b^j t^j), tr(t) = u
    Int binom(1);
    for (unsigned j = 1; j < up; ++j) {
        binom = exact_div(binom * Int(static_cast<long long>(up - j + 1)), Int(static_cast<long long>(j)));
        Int coeff = exact_div(binom, P) * pow(a, up - j) * pow(b, j) * pow(P, j - 1);
        out[2] += coeff;
    }
    return out;
}

LewisDiagram constant_Z(int n) {
    LewisDiagram T;
    T.lattice = cyclic_lattice(n);
    T.pair = {complete_system(T.lattice), complete_system(T.lattice)};
    T.levels = T.lattice.subgroups;
    T.construction = "constantZ:order=" + std::to_string(n);
    for (int d : T.levels) {
        T.level[d] = integers();
        T.weyl[d] = identity_mat(1);
    }
    for (int e : T.levels)
        for (int d : T.levels) {
            if (e == d || d % e != 0) continue;
            T.res_all[{e, d}] = to_mat({{1}});
            T.tr_all[{e, d}] = to_mat({{d / e}});
            unsigned idx = static_cast<unsigned>(d / e);
            T.nm_all[{e, d}] = NormMap{[idx](const Vec& x) { return Vec{pow(x[0], idx)}; }, "power"};
        }
    return T;
}

LewisDiagram initial_burnside(int n, const CompatiblePair& pair) {
    if (!is_compatible_pair(pair.mult, pair.add)) throw std::invalid_argument("initial_burnside: not a compatible pair");
    LewisDiagram full = burnside(n);
    LewisDiagram T;
    T.lattice = full.lattice;
    T.pair = pair;
    T.levels = full.levels;
    T.construction = "initial:order=" + std::to_string(n);
    std::map<int, std::vector<size_t>> keep; // basis positions kept at each level
    for (int d : T.levels) {
        auto Ks = orbit_basis(d);
        for (size_t i = 0; i < Ks.size(); ++i)
            if (pair.add.contains(Ks[i], d)) keep[d].push_back(i);
    }
    auto shared_full = std::make_shared<LewisDiagram>(std::move(full));
    auto shared_keep = std::make_shared<const std::map<int, std::vector<size_t>>>(std::move(keep));
    auto embed = [shared_full, shared_keep](int d, const Vec& x) {
        const auto& k = shared_keep->at(d);
        Vec v = zero_vec(shared_full->alg(d).rank());
        for (size_t i = 0; i < k.size(); ++i) v[k[i]] = x[i];
        return v;
    };
    auto extract = [shared_keep](int d, const Vec& v) {
        Vec x;
        std::vector<bool> used(v.size(), false);
        for (size_t i : shared_keep->at(d)) {
            x.push_back(v[i]);
            used[i] = true;
        }
        for (size_t i = 0; i < v.size(); ++i)
            if (!used[i] && !v[i].is_zero()) throw std::logic_error("initial_burnside: element leaves the admissible subring");
        return x;
    };
    const LewisDiagram& F = *shared_full;
    for (int d : T.levels) {
        const Algebra& A = F.alg(d);
        size_t r = shared_keep->at(d).size();
        std::vector<std::string> names;
        for (size_t i : shared_keep->at(d)) names.push_back(A.basis_names[i]);
        std::vector<std::vector<Vec>> mult(r, std::vector<Vec>(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) mult[i][j] = extract(d, A.mul(A.basis(shared_keep->at(d)[i]), A.basis(shared_keep->at(d)[j])));
        std::vector<Character> chars;
        for (const auto& c : A.characters) {
            Character s{c.name, {}, c.modulus};
            for (size_t i : shared_keep->at(d)) s.values.push_back(c.values[i]);
            bool dup = std::any_of(chars.begin(), chars.end(), [&](const Character& o) { return o.values == s.values; });
            if (!dup) chars.push_back(std::move(s));
        }
        T.level[d] = make_algebra("A_O(" + subgroup_label(d) + ")", names, mult, extract(d, A.unit), chars);
        T.weyl[d] = identity_mat(r);
    }
    for (const auto& [e, m] : F.res_all) {
        auto [K, H] = e;
        Mat res;
        for (size_t i : shared_keep->at(H)) res.push_back(extract(K, F.res(K, H, F.alg(H).basis(i))));
        T.res_all[e] = res;
    }
    for (const auto& [e, m] : F.tr_all) {
        auto [K, H] = e;
        if (!pair.add.contains(K, H)) continue;
        Mat tr;
        for (size_t i : shared_keep->at(K)) tr.push_back(extract(H, F.tr(K, H, F.alg(K).basis(i))));
        T.tr_all[e] = tr;
    }
    for (const auto& [e, nmap] : F.nm_all) {
        auto [K, H] = e;
        if (!pair.mult.contains(K, H)) continue;
        T.nm_all[e] = NormMap{[shared_full, K, H, embed, extract](const Vec& x) { return extract(H, shared_full->nm_all.at({K, H}).fn(embed(K, x))); },
                              "marks"};
    }
    return T;
}

Quotient geometric_fixed_points(const LewisDiagram& T, int K, int H) {
    if (!T.has_tr(K, H)) throw std::invalid_argument("geometric fixed points need the transfer " + std::to_string(K) + "->" + std::to_string(H));
    Submodule im = image(T.tr_map(K, H), Submodule::whole(T.alg_ptr(K)));
    return quotient_algebra(ideal_closure(im), "Phi");
}

GhostDiagram ghost(const LewisDiagram& T) {
    if (T.levels.size() != 2) throw std::invalid_argument("ghost: expected a two-level diagram");
    GhostDiagram G;
    G.base = T;
    int K = G.K = T.levels[0], H = G.H = T.levels[1];
    if (!T.has_tr(K, H) || !T.has_nm(K, H)) throw std::invalid_argument("ghost: the two levels must be joined by a transfer and a norm");
    const Algebra& AK = T.alg(K);
    G.weyl_step = T.lattice.n / H;
    long orbit = H / K;
    Mat action = identity_mat(AK.rank());
    if (T.weyl.count(K))
        for (long i = 0; i < G.weyl_step; ++i) action = mat_mul(action, T.weyl.at(K), AK.rank());
    G.fixed = fixed_subring(T.alg_ptr(K), action, "Fix");
    G.phi = geometric_fixed_points(T, K, H);
    AlgebraPtr top = product_algebra(G.fixed.algebra, G.phi.algebra, "Fix x Phi");
    size_t rf = G.fixed.algebra->rank(), rp = G.phi.algebra->rank();
    Submodule fixed_span(T.alg_ptr(K), G.fixed.inclusion.matrix);
    auto fix_coords = [fixed_span](const Vec& v) {
        auto c = fixed_span.coordinates(v);
        if (!c) throw std::logic_error("ghost: element is not Weyl-fixed");
        return *c;
    };
    long step = G.weyl_step;
    auto Tcopy = std::make_shared<LewisDiagram>(T);
    auto orbit_fold = [Tcopy, K, step, orbit](const Vec& x, bool product) {
        const Algebra& A = Tcopy->alg(K);
        Vec s = product ? A.unit : A.zero();
        for (long i = 0; i < orbit; ++i) {
            Vec gx = Tcopy->conj(K, step * i, x);
            s = product ? A.mul(s, gx) : A.add(s, gx);
        }
        return s;
    };
    auto join = [rf](Vec a, const Vec& b) {
        a.resize(rf);
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    LewisDiagram g;
    g.lattice = T.lattice;
    g.pair = T.pair;
    g.levels = T.levels;
    g.construction = "ghost(" + T.construction + ")";
    g.level[K] = T.alg_ptr(K);
    g.level[H] = top;
    if (T.weyl.count(K)) g.weyl[K] = T.weyl.at(K);
    g.weyl[H] = identity_mat(top->rank());
    Mat res;
    for (const auto& row : G.fixed.inclusion.matrix) res.push_back(row);
    for (size_t i = 0; i < rp; ++i) res.push_back(AK.zero());
    g.res_all[{K, H}] = res;
    Mat tr;
    for (size_t i = 0; i < AK.rank(); ++i) tr.push_back(join(fix_coords(orbit_fold(AK.basis(i), false)), zero_vec(rp)));
    g.tr_all[{K, H}] = tr;
    auto phi_map = G.phi.map;
    auto base_nm = T.nm_all.at({K, H}).fn;
    g.nm_all[{K, H}] = NormMap{[orbit_fold, fix_coords, join, phi_map, base_nm](const Vec& x) {
                                   return join(fix_coords(orbit_fold(x, true)), phi_map(base_nm(x)));
                               },
                               "ghost"};
    G.ghost = std::move(g);
    Mat chi;
    const Algebra& AH = T.alg(H);
    for (size_t i = 0; i < AH.rank(); ++i) chi.push_back(join(fix_coords(T.res(K, H, AH.basis(i))), phi_map(AH.basis(i))));
    G.ghost_top = LinearMap{T.alg_ptr(H), top, chi};
    Mat nb;
    for (size_t i = 0; i < AK.rank(); ++i) nb.push_back(phi_map(T.nm(K, H, AK.basis(i))));
    G.nm_bar = LinearMap{T.alg_ptr(K), G.phi.algebra, nb};
    return G;
}

CheckResult check_ghost_map(const GhostDiagram& G, const SampleOptions& opt) {
    std::mt19937_64 rng(opt.seed + 7);
    const auto& T = G.base;
    const auto& g = G.ghost;
    int K = G.K, H = G.H;
    const Algebra& AK = T.alg(K);
    const Algebra& AH = T.alg(H);
    const Algebra& top = g.alg(H);
    const Algebra& Phi = *G.phi.algebra;
    for (size_t s = 0; s < opt.samples; ++s) {
        Vec x = random_element(AK, rng, opt.bound), x2 = random_element(AK, rng, opt.bound);
        Vec y = random_element(AH, rng, opt.bound), y2 = random_element(AH, rng, opt.bound);
        if (!top.equal(G.ghost_top(T.tr(K, H, x)), g.tr(K, H, x))) return CheckFailure{"ghost map vs tr", "x=" + AK.format(x)};
        if (!AK.equal(g.res(K, H, G.ghost_top(y)), T.res(K, H, y))) return CheckFailure{"ghost map vs res", "y=" + AH.format(y)};
        if (!top.equal(G.ghost_top(T.nm(K, H, x)), g.nm(K, H, x))) return CheckFailure{"ghost map vs nm", "x=" + AK.format(x)};
        if (!top.equal(G.ghost_top(AH.mul(y, y2)), top.mul(G.ghost_top(y), G.ghost_top(y2))))
            return CheckFailure{"ghost map multiplicative", "y=" + AH.format(y)};
        if (!Phi.equal(G.nm_bar(AK.add(x, x2)), Phi.add(G.nm_bar(x), G.nm_bar(x2))))
            return CheckFailure{"norm modulo transfers is not additive", "x=" + AK.format(x)};
        if (!Phi.equal(G.nm_bar(x), G.phi.map(T.nm(K, H, x)))) return CheckFailure{"norm modulo transfers", "x=" + AK.format(x)};
    }
    return std::nullopt;
}

int ConstructionSpec::order() const {
    long n = 1;
    if (primes.size() == 1)
        for (int i = 0; i < exponent; ++i) n *= primes[0];
    else
        for (long p : primes) n *= p;
    return static_cast<int>(n);
}

std::string ConstructionSpec::str() const {
    std::string s = kind + ":";
    if (primes.size() == 1) {
        s += "p=" + std::to_string(primes[0]);
        if (exponent != 1) s += ",n=" + std::to_string(exponent);
    } else {
        s += "pq=";
        for (size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + std::to_string(primes[i]);
    }
    return s;
}

ConstructionSpec parse_construction(const std::string& text, const std::vector<long>& fallback_primes) {
    ConstructionSpec spec;
    auto colon = text.find(':');
    spec.kind = text.substr(0, colon);
    if (spec.kind == "constant_Z" || spec.kind == "Z") spec.kind = "constantZ";
    if (spec.kind != "burnside" && spec.kind != "constantZ" && spec.kind != "initial")
        throw std::invalid_argument("unknown construction '" + spec.kind + "'");
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    std::smatch m;
    std::string s = rest;
    std::regex pq_re(R"(pq=(\d+),(\d+))"), p_re(R"(p=(\d+))"), n_re(R"(n=(\d+))");
    if (std::regex_search(s, m, pq_re)) {
        spec.primes = {std::stol(m[1]), std::stol(m[2])};
        s = m.prefix().str() + m.suffix().str();
    } else if (std::regex_search(s, m, p_re)) {
        spec.primes = {std::stol(m[1])};
        s = m.prefix().str() + m.suffix().str();
    }
    if (std::regex_search(s, m, n_re)) {
        spec.exponent = std::stoi(m[1]);
        s = m.prefix().str() + m.suffix().str();
    }
    s = std::regex_replace(s, std::regex("[,\\s]"), "");
    if (!s.empty()) throw std::invalid_argument("cannot parse construction '" + text + "'");
    if (spec.primes.empty()) spec.primes = fallback_primes;
    if (spec.primes.empty()) throw std::invalid_argument("construction '" + text + "' needs a prime (p=.. or --prime)");
    for (long p : spec.primes)
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (spec.primes.size() == 2 && spec.primes[0] == spec.primes[1]) throw std::invalid_argument("pq needs distinct primes");
    if (spec.primes.size() > 2) throw std::invalid_argument("at most two primes are supported");
    if (spec.exponent < 1 || (spec.primes.size() == 2 && spec.exponent != 1)) throw std::invalid_argument("bad exponent");
    return spec;
}

LewisDiagram build(const ConstructionSpec& spec, const std::optional<CompatiblePair>& pair) {
    int n = spec.order();
    LewisDiagram T;
    if (spec.kind == "burnside")
        T = burnside(n);
    else if (spec.kind == "constantZ")
        T = constant_Z(n);
    else {
        if (!pair) throw std::invalid_argument("initial needs a compatible pair");
        T = initial_burnside(n, *pair);
        T.construction = spec.str();
        return T;
    }
    T.construction = spec.str();
    if (pair) T = forget_pair(T, *pair);
    return T;
}

} // namespace tambara
