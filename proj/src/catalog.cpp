#include "tambara/spectra.hpp"

#include <algorithm>
#include <stdexcept>

namespace tambara {

std::vector<LevelPrime> ring_primes(AlgebraPtr alg, const Int& q, const Mat* action) {
    std::vector<LevelPrime> out;
    Submodule target(integers(), q.is_zero() ? Mat{} : Mat{{q}});
    for (const auto& c : alg->characters) {
        const Int& m = c.modulus;
        if (q.is_zero() ? !m.is_zero() : (!m.is_zero() && !divides(q, m))) continue;
        Mat col;
        for (const auto& v : c.values) col.push_back({v});
        Submodule P = preimage(LinearMap{alg, integers(), col}, target);
        if (action) {
            Mat g = *action;
            Mat id = identity_mat(alg->rank());
            for (size_t k = 0; g != id && k < 1024; ++k) {
                Mat moved;
                for (const auto& r : P.basis()) moved.push_back(alg->reduce(apply(g, r, alg->rank())));
                P = intersect(P, Submodule(alg, moved));
                g = mat_mul(g, *action, alg->rank());
            }
        }
        bool seen = std::any_of(out.begin(), out.end(), [&](const LevelPrime& lp) { return lp.ideal == P; });
        if (!seen) out.push_back({P, "ker(" + c.name + ")"});
    }
    return out;
}

namespace {

// (a, b) inside Fix x Phi from a submodule of Fix and one of Phi
Submodule product_submodule(AlgebraPtr top, const Submodule& a, const Submodule& b) {
    size_t ra = a.algebra()->rank(), rb = b.algebra()->rank();
    Mat rows;
    for (const auto& r : a.basis()) {
        Vec v = r;
        v.resize(ra + rb, Int(0));
        rows.push_back(v);
    }
    for (const auto& r : b.basis()) {
        Vec v = zero_vec(ra);
        v.insert(v.end(), r.begin(), r.end());
        rows.push_back(v);
    }
    return Submodule(std::move(top), rows);
}

Mat bottom_action(const LewisDiagram& T, int K, long step) {
    const Algebra& A = T.alg(K);
    Mat action = identity_mat(A.rank());
    if (T.weyl.count(K))
        for (long i = 0; i < step; ++i) action = mat_mul(action, T.weyl.at(K), A.rank());
    return action;
}

} // namespace

std::vector<GhostPrime> ghost_primes(const GhostDiagram& G, const std::vector<LevelPrime>& bottom_catalog,
                                     const std::vector<LevelPrime>& phi_catalog) {
    auto base = std::make_shared<LewisDiagram>(G.base);
    auto gd = std::make_shared<LewisDiagram>(G.ghost);
    AlgebraPtr top = gd->alg_ptr(G.H);
    std::vector<GhostPrime> out;
    auto emit = [&](int kind, const Submodule& bottom, const Submodule& top_ideal, const std::string& lineage) {
        GhostPrime gp{kind, TambaraIdeal{gd, {}}, TambaraIdeal{base, {}}, lineage};
        gp.ghost_ideal.levels.emplace(G.K, bottom);
        gp.ghost_ideal.levels.emplace(G.H, top_ideal);
        gp.pullback.levels.emplace(G.K, bottom);
        gp.pullback.levels.emplace(G.H, preimage(G.ghost_top, top_ideal));
        out.push_back(std::move(gp));
    };
    for (const auto& a : bottom_catalog) {
        Submodule fixed_part = preimage(G.fixed.inclusion, a.ideal);
        emit(1, a.ideal, product_submodule(top, fixed_part, Submodule::whole(G.phi.algebra)), "gh1(" + a.lineage + ")");
    }
    for (const auto& b : phi_catalog) {
        Submodule bottom = preimage(G.nm_bar, b.ideal);
        Submodule fixed_part = preimage(G.fixed.inclusion, bottom);
        emit(2, bottom, product_submodule(top, fixed_part, b.ideal), "gh2(" + b.lineage + ")");
    }
    return out;
}

std::vector<GhostPrime> ghost_primes(const GhostDiagram& G, const Int& q) {
    Mat action = bottom_action(G.base, G.K, G.weyl_step);
    bool trivial = action == identity_mat(G.base.alg(G.K).rank());
    auto bottom = ring_primes(G.base.alg_ptr(G.K), q, trivial ? nullptr : &action);
    auto phi = ring_primes(G.phi.algebra, q);
    return ghost_primes(G, bottom, phi);
}

std::vector<Point> ghost_spectrum(const GhostDiagram& G, const Int& q) {
    std::vector<Point> out;
    for (auto& gp : ghost_primes(G, q)) {
        bool seen = std::any_of(out.begin(), out.end(), [&](const Point& p) { return p.ideal == gp.pullback; });
        if (!seen) out.push_back({std::move(gp.pullback), gp.lineage, "ghost"});
    }
    return out;
}

std::vector<Sample> default_samples(const std::vector<long>& special, size_t generic) {
    std::vector<Sample> out{{Int(0), "0"}};
    for (long p : special) out.push_back({Int(p), "p=" + std::to_string(p)});
    for (long r : small_primes_avoiding(special, generic)) out.push_back({Int(r), "generic"});
    return out;
}

std::optional<FamilyRegistry> registry_for(const LewisDiagram& T) {
    auto colon = T.construction.find(':');
    std::string kind = T.construction.substr(0, colon);
    int n = T.lattice.n;
    auto f = prime_factors(n);
    if (f.size() != 1 || T.levels.size() != T.lattice.subgroups.size()) return std::nullopt;
    long p = f[0];
    int e = n == p ? 1 : (n == p * p ? 2 : 0);
    if (e == 0) return std::nullopt;
    FamilyRegistry r;
    r.construction = kind;
    if (kind == "constantZ") {
        if (e == 1)
            r.families = {{"A", {"q", "q"}, {}}, {"B", {"q", "1"}, {}}};
        else
            r.families = {{"A", {"q", "q", "q"}, {}}, {"B", {"q", "q", "1"}, {}}, {"C", {"q", "1", "1"}, {}}};
        return r;
    }
    if (kind != "burnside") return std::nullopt;
    if (e == 1) {
        r.families = {{"A", {"q,t", "1"}, {}},
                      {"B1", {"q,t-p", "1"}, {}},
                      {"B2", {"q,t-p", "q"}, {}},
                      {"C", {"q", "q"}, {{p, {"p,t", "p"}}}}};
        return r;
    }
    std::vector<std::string> closed = {"p,t,u", "p,t", "p"};
    r.families = {{"A", {"q,t,u", "1", "1"}, {}},
                  {"B1", {"q,t-p,u", "1", "1"}, {}},
                  {"B2", {"q,t-p,u", "q,t", "1"}, {}},
                  {"C1", {"q,t-p,u-p^2", "1", "1"}, {}},
                  {"C2", {"q,t-p,u-p^2", "q,t-p", "1"}, {}},
                  {"C3", {"q,t-p,u-p^2", "q,t-p", "q"}, {}},
                  {"D", {"q,t-p", "q", "q"}, {{p, closed}}},
                  {"E", {"q,u", "q,t", "1"}, {{p, {"p,t,u", "p,t", "1"}}}},
                  {"F", {"q,u-pt", "q,t-p", "q"}, {{p, closed}}},
                  {"G", {"q", "q", "q"}, {{p, closed}}}};
    return r;
}

TambaraIdeal evaluate(const FamilyTemplate& f, DiagramPtr T, const Int& q, long p) {
    const auto* lv = &f.levels;
    if (q.is_zero() == false) {
        auto it = f.overrides.find(q.to_int64());
        if (it != f.overrides.end()) lv = &it->second;
    }
    if (lv->size() != T->levels.size()) throw std::invalid_argument("family " + f.name + " has the wrong number of levels");
    TambaraIdeal I{T, {}};
    size_t i = 0;
    for (auto it = T->levels.rbegin(); it != T->levels.rend(); ++it, ++i) {
        const Algebra& a = T->alg(*it);
        Mat gens;
        for (const auto& s : parse_generators(a, (*lv)[i], Int(p))) gens.push_back(s.eval(q));
        I.levels.emplace(*it, ideal_from_generators(T->alg_ptr(*it), gens));
    }
    return I;
}

} // namespace tambara
