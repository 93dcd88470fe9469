#include "tambara/spectra.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tambara {

namespace {

void add_unique(std::vector<Point>& out, Point p) {
    bool seen = std::any_of(out.begin(), out.end(), [&](const Point& o) { return o.ideal == p.ideal; });
    if (!seen) out.push_back(std::move(p));
}

std::set<Edge> nontrivial(const std::vector<Edge>& v) {
    std::set<Edge> s;
    for (auto e : v)
        if (e.first != e.second) s.insert(e);
    return s;
}

std::string level_list(const std::vector<int>& levels) {
    std::string s;
    for (int d : levels) s += (s.empty() ? "" : ",") + std::to_string(d);
    return "{" + s + "}";
}

DiagramPtr sub_diagram(const LewisDiagram& T, const std::vector<int>& levels) {
    return std::make_shared<LewisDiagram>(restrict_levels(T, levels));
}

// the same diagram with only the transfers along visible norms
DiagramPtr strip_transfers(const LewisDiagram& T) {
    auto S = std::make_shared<LewisDiagram>(T);
    for (auto it = S->tr_all.begin(); it != S->tr_all.end();)
        if (!T.has_nm(it->first.first, it->first.second))
            it = S->tr_all.erase(it);
        else
            ++it;
    return S;
}

SampleOptions audit_options(const SpectrumOptions& opt) { return {opt.audit_samples, opt.seed, 5}; }

std::vector<Point> leaf_points(DiagramPtr T, const Int& q, const SpectrumOptions& opt);
std::vector<Point> search_top(DiagramPtr T, const Int& q, const SpectrumOptions& opt);

std::vector<Point> fiber_points(DiagramPtr T, const Int& q, const SpectrumOptions& opt) {
    std::vector<int> maxima;
    for (int L : T->levels)
        if (std::none_of(T->levels.begin(), T->levels.end(), [&](int M) { return M != L && M % L == 0; })) maxima.push_back(L);
    struct Partial {
        std::map<int, Submodule> levels;
        std::string lineage;
    };
    std::vector<Partial> partial{{{}, ""}};
    for (int M : maxima) {
        std::vector<int> below;
        for (int d : T->levels)
            if (M % d == 0) below.push_back(d);
        auto pts = prime_points(sub_diagram(*T, below), q, opt);
        std::vector<Partial> next;
        for (const auto& pa : partial)
            for (const auto& pt : pts) {
                bool agree = true;
                for (const auto& [d, s] : pt.ideal.levels) {
                    auto it = pa.levels.find(d);
                    if (it != pa.levels.end() && it->second != s) agree = false;
                }
                if (!agree) continue;
                Partial m = pa;
                for (const auto& [d, s] : pt.ideal.levels) m.levels.emplace(d, s);
                m.lineage += (m.lineage.empty() ? "" : "x") + pt.lineage;
                next.push_back(std::move(m));
            }
        partial = std::move(next);
    }
    std::vector<Point> out;
    for (auto& pa : partial) {
        TambaraIdeal I{T, std::move(pa.levels)};
        if (is_ideal(I, audit_options(opt))) continue;
        if (refute_primality(I, {opt.bound, true})) continue;
        add_unique(out, {std::move(I), "fib(" + pa.lineage + ")", "fiber+search"});
    }
    return out;
}

std::vector<Point> search_top(DiagramPtr T, const Int& q, const SpectrumOptions& opt) {
    int top = T->top();
    std::vector<int> lower(T->levels.begin(), T->levels.end() - 1);
    auto lowerT = sub_diagram(*T, lower);
    std::vector<Point> out;
    for (const auto& J : prime_points(lowerT, q, opt)) {
        TambaraIdeal upper = extend_component_prime(T, J.ideal);
        std::map<int, Mat> seeds;
        for (const auto& [d, s] : J.ideal.levels) seeds[d] = s.basis();
        std::vector<TambaraIdeal> visited;
        auto same_below = [&](const TambaraIdeal& C) {
            return std::all_of(lower.begin(), lower.end(), [&](int d) { return C.at(d) == J.ideal.at(d); });
        };
        std::function<void(const TambaraIdeal&, const std::string&)> explore = [&](const TambaraIdeal& C,
                                                                                  const std::string& path) {
            if (std::find(visited.begin(), visited.end(), C) != visited.end()) return;
            visited.push_back(C);
            if (!same_below(C) || !upper.at(top).contains(C.at(top))) return;
            auto w = refute_primality(C, {opt.bound, true});
            if (!w) {
                add_unique(out, {C, "S[" + J.lineage + "]" + path, "search"});
                return;
            }
            std::pair<int, const Vec*> grow[2] = {{w->H1, &w->x}, {w->H2, &w->y}};
            for (int k = 0; k < 2; ++k) {
                std::map<int, Mat> s;
                for (const auto& [d, sub] : C.levels) s[d] = sub.basis();
                s[grow[k].first].push_back(*grow[k].second);
                explore(generate(T, s), path + (k == 0 ? "x" : "y"));
            }
        };
        explore(generate(T, seeds), "");
        explore(closure(upper), "u");
    }
    return out;
}

std::vector<Point> leaf_points(DiagramPtr T, const Int& q, const SpectrumOptions& opt) {
    if (T->levels.size() == 1) {
        int d = T->levels[0];
        Mat action;
        bool act = !T->trivial_action(d);
        if (act) action = T->weyl.at(d);
        std::vector<Point> out;
        for (auto& lp : ring_primes(T->alg_ptr(d), q, act ? &action : nullptr)) {
            TambaraIdeal I{T, {}};
            I.levels.emplace(d, lp.ideal);
            add_unique(out, {std::move(I), lp.lineage, "ring"});
        }
        return out;
    }
    if (T->levels.size() == 2) {
        std::vector<Point> out;
        for (auto& p : ghost_spectrum(ghost(*T), q)) add_unique(out, {rebind(p.ideal, T), p.lineage, p.provenance});
        return out;
    }
    int top = T->top();
    bool unique_max = std::all_of(T->levels.begin(), T->levels.end(), [&](int d) { return top % d == 0; });
    return unique_max ? search_top(T, q, opt) : fiber_points(T, q, opt);
}

} // namespace

std::vector<std::vector<int>> level_components(const LewisDiagram& T) {
    std::map<int, int> parent;
    for (int d : T.levels) parent[d] = d;
    std::function<int(int)> find = [&](int d) { return parent[d] == d ? d : parent[d] = find(parent[d]); };
    for (auto [K, H] : nontrivial(T.visible_norms())) parent[find(K)] = find(H);
    std::map<int, std::vector<int>> groups;
    for (int d : T.levels) groups[find(d)].push_back(d);
    std::vector<std::vector<int>> out;
    for (auto& [r, g] : groups) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

bool level_saturated(const LewisDiagram& T) {
    for (auto [K, H] : nontrivial(T.visible_norms()))
        for (int L : T.levels)
            if (L != H && L % K == 0 && H % L == 0 && !T.has_nm(L, H)) return false;
    return true;
}

std::vector<Point> spectrum_self_compatible(DiagramPtr T, const Int& q, const SpectrumOptions& opt) {
    if (!level_saturated(*T)) throw std::invalid_argument("spectrum_self_compatible: multiplicative system is not saturated");
    auto comps = level_components(*T);
    if (comps.size() == 1) return leaf_points(T, q, opt);
    std::vector<Point> out;
    for (const auto& c : comps) {
        auto sub = sub_diagram(*T, c);
        for (const auto& J : leaf_points(sub, q, opt))
            add_unique(out, {extend_component_prime(T, J.ideal), "I" + level_list(c) + "(" + J.lineage + ")", "thm-A/" + J.provenance});
    }
    return out;
}

std::vector<Point> prime_points(DiagramPtr T, const Int& q, const SpectrumOptions& opt) {
    if (level_saturated(*T)) {
        if (nontrivial(T->visible_transfers()) == nontrivial(T->visible_norms())) return spectrum_self_compatible(T, q, opt);
        std::vector<Point> out;
        for (auto& p : spectrum_self_compatible(strip_transfers(*T), q, opt)) {
            TambaraIdeal I = rebind(p.ideal, T);
            if (!is_ideal(I, audit_options(opt))) out.push_back({std::move(I), p.lineage, p.provenance + "+thm-B"});
        }
        return out;
    }
    bool full = T->levels.size() == T->lattice.subgroups.size();
    if (full && cohomological(*T).multiplicative()) {
        TransferSystem hull = saturated_hull(T->pair.mult);
        if (is_compatible_pair(hull, T->pair.add)) {
            auto H = std::make_shared<LewisDiagram>(with_pair(*T, {hull, T->pair.add}));
            std::vector<Point> out;
            for (auto& p : prime_points(H, q, opt)) out.push_back({rebind(p.ideal, T), p.lineage, p.provenance + "+thm-C"});
            return out;
        }
    }
    return search_top(T, q, opt);
}

// ---- tables ----

std::vector<std::string> SpectrumTable::family_names() const {
    std::vector<std::string> out;
    for (const auto& f : families) out.push_back(f.name);
    return out;
}

const PrimeFamily* SpectrumTable::family(const std::string& name) const {
    for (const auto& f : families)
        if (f.name == name) return &f;
    return nullptr;
}

bool SpectrumTable::identified(long prime, const std::vector<std::string>& names) const {
    for (const auto& id : identifications) {
        if (id.prime != prime) continue;
        if (std::all_of(names.begin(), names.end(),
                        [&](const std::string& n) { return std::find(id.names.begin(), id.names.end(), n) != id.names.end(); }))
            return true;
    }
    return false;
}

bool SpectrumTable::included(const std::string& sub, const std::string& sup, const std::string& stratum) const {
    return std::any_of(inclusions.begin(), inclusions.end(),
                       [&](const Inclusion& i) { return i.sub == sub && i.sup == sup && i.stratum == stratum; });
}

namespace {

std::string short_hash(const std::string& s) {
    uint32_t h = 2166136261u;
    for (unsigned char c : s) h = (h ^ c) * 16777619u;
    char buf[16];
    std::snprintf(buf, sizeof buf, "%06x", h & 0xffffff);
    return buf;
}

std::vector<std::string> describe_levels(const TambaraIdeal& I) {
    std::vector<std::string> out;
    for (auto it = I.levels.rbegin(); it != I.levels.rend(); ++it) out.push_back(it->second.describe());
    return out;
}

bool strictly_below(const TambaraIdeal& a, const TambaraIdeal& b) { return b.contains(a) && a != b; }

} // namespace

void assemble(SpectrumTable& t) {
    auto reg = registry_for(*t.diagram);
    long p = t.special.size() == 1 ? t.special[0] : 0;
    size_t S = t.samples.size();
    t.point_names.assign(S, {});
    t.families.clear();
    t.identifications.clear();
    t.inclusions.clear();

    std::vector<std::vector<TambaraIdeal>> evals; // [family][sample]
    if (reg)
        for (const auto& f : reg->families) {
            std::vector<TambaraIdeal> row;
            for (const auto& s : t.samples) row.push_back(evaluate(f, t.diagram, s.q, p));
            evals.push_back(std::move(row));
        }
    for (size_t s = 0; s < S; ++s) {
        t.point_names[s].assign(t.points[s].size(), {});
        for (size_t i = 0; i < t.points[s].size(); ++i)
            for (size_t f = 0; f < evals.size(); ++f)
                if (evals[f][s] == t.points[s][i].ideal) t.point_names[s][i].push_back(reg->families[f].name);
    }
    auto named_in = [&](size_t s, const std::string& name) -> int {
        for (size_t i = 0; i < t.points[s].size(); ++i) {
            const auto& nm = t.point_names[s][i];
            if (std::find(nm.begin(), nm.end(), name) != nm.end()) return static_cast<int>(i);
        }
        return -1;
    };

    // registry families present at q = 0 and every generic sample
    std::vector<std::string> present;
    for (size_t f = 0; f < evals.size(); ++f) {
        const auto& name = reg->families[f].name;
        bool all = true;
        for (size_t s = 0; s < S; ++s)
            if (!t.samples[s].special() || t.samples[s].stratum == "0")
                if (t.samples[s].stratum == "generic" || t.samples[s].q.is_zero()) all = all && named_in(s, name) >= 0;
        if (!all) continue;
        present.push_back(name);
        bool at_special = true;
        std::string prov;
        for (size_t s = 0; s < S; ++s) {
            int i = named_in(s, name);
            if (t.samples[s].stratum != "0" && t.samples[s].special() && i < 0) at_special = false;
            if (prov.empty() && t.samples[s].stratum == "generic" && i >= 0) prov = t.points[s][i].provenance;
        }
        t.families.push_back({name, reg->families[f].levels, at_special ? "all" : "q!=p", prov});
    }
    auto is_present = [&](const std::string& n) { return std::find(present.begin(), present.end(), n) != present.end(); };

    // points with no present name: special-only families or synthesized ones
    std::map<std::string, std::string> synth; // lineage -> name
    for (size_t s = 0; s < S; ++s)
        for (size_t i = 0; i < t.points[s].size(); ++i) {
            auto& names = t.point_names[s][i];
            if (std::any_of(names.begin(), names.end(), is_present)) continue;
            const auto& pt = t.points[s][i];
            bool special = t.samples[s].special() && !t.samples[s].q.is_zero();
            if (special && !names.empty()) {
                std::string fam = names.front() + "_p";
                if (!t.family(fam)) t.families.push_back({fam, describe_levels(pt.ideal), "q=" + t.samples[s].q.str(), pt.provenance});
                names.insert(names.begin(), fam);
                continue;
            }
            auto it = synth.find(pt.lineage);
            if (it == synth.end()) {
                std::string name = "X" + short_hash(pt.lineage);
                it = synth.emplace(pt.lineage, name).first;
                t.families.push_back({name, describe_levels(pt.ideal), special ? "q=" + t.samples[s].q.str() : "generic", pt.provenance});
            }
            names.push_back(it->second);
        }
    // a synthesized family seen at every non-special sample holds for all q
    for (auto& f : t.families) {
        if (f.name.empty() || f.name[0] != 'X') continue;
        bool every = true, special_too = true;
        for (size_t s = 0; s < S; ++s) {
            bool here = named_in(s, f.name) >= 0;
            bool sp = t.samples[s].special() && !t.samples[s].q.is_zero();
            if (sp)
                special_too = special_too && here;
            else
                every = every && here;
        }
        if (every) f.stratum = special_too ? "all" : "q!=p";
    }

    for (size_t s = 0; s < S; ++s) {
        if (!t.samples[s].special() || t.samples[s].q.is_zero()) continue;
        long prime = t.samples[s].q.to_int64();
        for (const auto& names : t.point_names[s]) {
            std::vector<std::string> shown;
            for (const auto& n : names)
                if (t.family(n)) shown.push_back(n);
            if (shown.size() >= 2) t.identifications.push_back({prime, shown});
        }
        for (size_t i = 0; i < t.points[s].size(); ++i)
            for (size_t j = 0; j < t.points[s].size(); ++j)
                if (i != j && strictly_below(t.points[s][i].ideal, t.points[s][j].ideal))
                    t.inclusions.push_back({t.point_names[s][i].front(), t.point_names[s][j].front(), t.samples[s].stratum});
    }
    std::vector<std::string> generic_names;
    for (const auto& f : t.families)
        if (f.stratum == "all" || f.stratum == "q!=p") generic_names.push_back(f.name);
    for (const auto& a : generic_names)
        for (const auto& b : generic_names) {
            if (a == b) continue;
            bool any = false, all = true;
            for (size_t s = 0; s < S; ++s) {
                if (t.samples[s].stratum != "generic") continue;
                int i = named_in(s, a), j = named_in(s, b);
                if (i < 0 || j < 0) continue;
                any = true;
                all = all && strictly_below(t.points[s][i].ideal, t.points[s][j].ideal);
            }
            if (any && all) t.inclusions.push_back({a, b, "q"});
        }
}

SpectrumTable spectrum(const LewisDiagram& T, const SpectrumOptions& opt) {
    SpectrumTable t;
    t.diagram = std::make_shared<LewisDiagram>(T);
    t.special = prime_factors(T.lattice.n);
    t.samples = default_samples(t.special, opt.generic_samples);
    for (const auto& s : t.samples) t.points.push_back(prime_points(t.diagram, s.q, opt));
    if (level_saturated(T))
        t.route = nontrivial(T.visible_transfers()) == nontrivial(T.visible_norms()) ? "thm-A" : "thm-A+thm-B";
    else if (!t.points.empty() && !t.points[0].empty() && t.points[0][0].provenance.find("thm-C") != std::string::npos)
        t.route = "thm-C";
    else
        t.route = "search";
    assemble(t);
    return t;
}

SpectrumTable add_transfers(const SpectrumTable& table, const TransferSystem& Oa, const SpectrumOptions& opt) {
    const LewisDiagram& T = *table.diagram;
    if (!T.pair.add.subset_of(Oa)) throw std::invalid_argument("add_transfers: the new additive system must contain the old one");
    SpectrumTable t = table;
    t.diagram = std::make_shared<LewisDiagram>(with_pair(T, {T.pair.mult, Oa}));
    if (Oa == T.pair.add) {
        for (auto& pts : t.points)
            for (auto& p : pts) p.ideal = rebind(p.ideal, t.diagram);
        assemble(t);
        return t;
    }
    for (auto& pts : t.points) {
        std::vector<Point> kept;
        for (auto& p : pts) {
            TambaraIdeal I = rebind(p.ideal, t.diagram);
            if (!is_ideal(I, audit_options(opt))) kept.push_back({std::move(I), p.lineage, p.provenance + "+thm-B"});
        }
        pts = std::move(kept);
    }
    t.route = table.route + "+thm-B";
    assemble(t);
    return t;
}

SpectrumTable hull_transport(const LewisDiagram& T, const SpectrumOptions& opt) {
    auto report = cohomological(T);
    if (!report.multiplicative())
        throw HullRefused("not multiplicatively cohomological (" + report.multiplicative_failure->detail +
                          "); the spectrum is sensitive to the saturated hull, use refute_primality and the search route");
    TransferSystem hull = saturated_hull(T.pair.mult);
    if (hull == T.pair.mult) return spectrum(T, opt);
    SpectrumTable t = spectrum(with_pair(T, {hull, T.pair.add}), opt);
    t.diagram = std::make_shared<LewisDiagram>(T);
    for (auto& pts : t.points)
        for (auto& p : pts) {
            p.ideal = rebind(p.ideal, t.diagram);
            p.provenance += "+thm-C";
        }
    t.route = "thm-C";
    assemble(t);
    return t;
}

} // namespace tambara
