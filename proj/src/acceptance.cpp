#include "tambara/acceptance.hpp"

#include "tambara/construct.hpp"
#include "tambara/spectra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace tambara {

namespace {

struct Checker {
    std::vector<std::string> failures;
    size_t checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }

    CriterionResult result(int id, std::string title, const std::string& summary) const {
        CriterionResult r{id, std::move(title), failures.empty(), {}};
        if (failures.empty()) {
            r.detail = summary + " (" + std::to_string(checks) + " checks)";
        } else {
            r.detail = std::to_string(failures.size()) + " of " + std::to_string(checks) + " checks failed: " + failures.front();
            for (size_t i = 1; i < failures.size() && i < 3; ++i) r.detail += "; " + failures[i];
        }
        return r;
    }
};

template <class F>
CriterionResult guarded(int id, const std::string& title, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {id, title, false, std::string("exception: ") + e.what()};
    }
}

CompatiblePair find_pair(const SubgroupLattice& lat, const std::string& name) {
    for (auto& pr : enumerate_compatible_pairs(lat))
        if (pair_name(pr) == name) return pr;
    throw std::invalid_argument("no compatible pair named " + name);
}

std::set<std::string> name_set(const SpectrumTable& t) {
    auto v = t.family_names();
    return {v.begin(), v.end()};
}

std::string join(const std::set<std::string>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
    return "{" + out + "}";
}

Int binomial(long n, long k) {
    Int r(1);
    for (long i = 1; i <= k; ++i) r = exact_div(r * Int(n - k + i), Int(i));
    return r;
}

long ipow(long p, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

using Expected = std::map<std::string, std::set<std::string>>;

void expect_tables(Checker& c, const LewisDiagram& full, const Expected& want, const std::string& tag,
                   std::map<std::string, SpectrumTable>* keep = nullptr) {
    for (const auto& [name, fams] : want) {
        auto T = forget_pair(full, find_pair(full.lattice, name));
        auto t = spectrum(T);
        c.expect(name_set(t) == fams, tag + " " + name + ": got " + join(name_set(t)) + ", want " + join(fams));
        if (keep) keep->emplace(name, std::move(t));
    }
}

bool same_points(const SpectrumTable& a, const SpectrumTable& b) {
    if (a.samples.size() != b.samples.size()) return false;
    for (size_t s = 0; s < a.samples.size(); ++s) {
        if (a.points[s].size() != b.points[s].size()) return false;
        for (const auto& p : a.points[s]) {
            bool found = std::any_of(b.points[s].begin(), b.points[s].end(),
                                     [&](const Point& o) { return o.ideal.levels == p.ideal.levels; });
            if (!found) return false;
        }
    }
    return true;
}

size_t homeomorphism_classes(const std::vector<ShapeGraph>& gs) {
    std::vector<size_t> reps;
    for (size_t i = 0; i < gs.size(); ++i)
        if (std::none_of(reps.begin(), reps.end(), [&](size_t r) { return homeomorphic(gs[r], gs[i]); })) reps.push_back(i);
    return reps.size();
}

TambaraIdeal family_at(const SpectrumTable& t, const std::string& name, const Int& q, long p) {
    auto reg = registry_for(*t.diagram);
    for (const auto& f : reg->families)
        if (f.name == name) return evaluate(f, t.diagram, q, p);
    throw std::invalid_argument("unknown family " + name);
}

} // namespace

CriterionResult criterion_counts(const AcceptanceOptions&) {
    return guarded(1, "enumeration counts", [] {
        Checker c;
        const size_t systems[] = {2, 5, 14}, pairs[] = {3, 12, 55};
        for (long p : {2L, 3L})
            for (int e = 1; e <= 3; ++e) {
                auto lat = cyclic_lattice(static_cast<int>(ipow(p, e)));
                size_t ns = enumerate_transfer_systems(lat).size(), np = enumerate_compatible_pairs(lat).size();
                std::string g = "C_" + std::to_string(ipow(p, e));
                c.expect(ns == systems[e - 1], g + " has " + std::to_string(ns) + " transfer systems");
                c.expect(np == pairs[e - 1], g + " has " + std::to_string(np) + " compatible pairs");
                Int formula = exact_div(binomial(3 * e + 3, e + 1), Int(2 * e + 3));
                c.expect(formula == Int(static_cast<long long>(np)), g + " pair count differs from the closed formula");
            }
        return c.result(1, "enumeration counts", "2/5/14 systems, 3/12/55 pairs, formula agrees, p=2,3");
    });
}

CriterionResult criterion_hull(const AcceptanceOptions&) {
    return guarded(2, "saturated hull", [] {
        Checker c;
        for (long p : {2L, 3L}) {
            auto lat = cyclic_lattice(static_cast<int>(p * p));
            auto O3 = parse_system(lat, "O3");
            c.expect(saturated_hull(O3) == complete_system(lat), "Hull(O3) != Ocomp for p=" + std::to_string(p));
            for (int e : {2, 3}) {
                auto L = cyclic_lattice(static_cast<int>(ipow(p, e)));
                for (const auto& ts : enumerate_transfer_systems(L)) {
                    c.expect(is_saturated(ts) == is_compatible_pair(ts, ts), "saturation vs self-compatibility at " + ts.str());
                    c.expect(is_saturated(saturated_hull(ts)) && ts.subset_of(saturated_hull(ts)), "hull not a saturated cover of " + ts.str());
                }
            }
        }
        return c.result(2, "saturated hull", "Hull(O3)=Ocomp; saturated iff self-compatible on C_{p^2}, C_{p^3}");
    });
}

CriterionResult criterion_axioms(const AcceptanceOptions& opt) {
    return guarded(3, "axiom suite", [&] {
        Checker c;
        SampleOptions so{opt.axiom_samples, opt.seed, 10};
        std::vector<std::pair<std::string, LewisDiagram>> ds;
        ds.emplace_back("burnside C_2", burnside_cp(2));
        ds.emplace_back("burnside C_3", burnside_cp(3));
        ds.emplace_back("burnside C_4", burnside_cp2(2));
        ds.emplace_back("burnside C_6", burnside_cpq(2, 3));
        for (int n : {2, 4, 6}) ds.emplace_back("constantZ C_" + std::to_string(n), constant_Z(n));
        for (const auto& pr : enumerate_compatible_pairs(cyclic_lattice(4)))
            ds.emplace_back("initial C_4 " + pair_name(pr), initial_burnside(4, pr));
        for (const auto& [name, T] : ds) {
            auto r = check_axioms(T, so);
            c.expect(!r, name + ": " + (r ? r->check + " " + r->detail : ""));
        }
        return c.result(3, "axiom suite", std::to_string(ds.size()) + " diagrams at " + std::to_string(opt.axiom_samples) + " samples");
    });
}

CriterionResult criterion_cohomological(const AcceptanceOptions&) {
    return guarded(4, "cohomological predicates", [] {
        Checker c;
        for (int n : {2, 4}) {
            auto rep = cohomological(constant_Z(n));
            c.expect(rep.additive() && rep.multiplicative(), "constantZ C_" + std::to_string(n) + " not cohomological");
        }
        for (long p : {2L, 3L}) {
            auto T = burnside_cp(p);
            auto rep = cohomological(T);
            const Algebra& top = T.alg(static_cast<int>(p));
            c.expect(rep.additive_failure && rep.additive_failure->x == top.basis(0), "burnside additive witness is not x = 1");
            c.expect(rep.multiplicative_failure && rep.multiplicative_failure->x == top.basis(1), "burnside multiplicative witness is not x = t");
            // tr(res(1)) = t and nm(res(t)) = nm(p) != t^p, computed directly
            Vec one = top.basis(0), t = top.basis(1);
            c.expect(T.tr(1, p, T.res(1, p, one)) == t, "tr(res(1)) != t");
            c.expect(T.nm(1, p, T.res(1, p, t)) != top.pow(t, static_cast<unsigned>(p)), "nm(res(t)) == t^p");
        }
        return c.result(4, "cohomological predicates", "constantZ both true; burnside C_p fails at x=1 (additive) and x=t (multiplicative)");
    });
}

CriterionResult criterion_constant_tables(const AcceptanceOptions&) {
    return guarded(5, "constant Z tables", [] {
        Checker c;
        for (long p : {2L, 3L}) {
            std::string tag = "Z p=" + std::to_string(p);
            std::map<std::string, SpectrumTable> cp;
            expect_tables(c, constant_Z(static_cast<int>(p)),
                          {{"(Otriv,Otriv)", {"A", "B"}}, {"(Otriv,Ocomp)", {"A", "B_p"}}, {"(Ocomp,Ocomp)", {"A"}}}, tag, &cp);
            std::string ps = "p=" + std::to_string(p);
            c.expect(cp.at("(Otriv,Otriv)").included("A", "B", "q") && cp.at("(Otriv,Otriv)").included("A", "B", ps),
                     tag + " A below B missing");
            c.expect(cp.at("(Otriv,Ocomp)").included("A", "B_p", ps), tag + " A_p below B_p missing");

            auto full = constant_Z(static_cast<int>(p * p));
            std::map<std::string, SpectrumTable> t;
            expect_tables(c, full,
                          {{"(Otriv,Otriv)", {"A", "B", "C"}},
                           {"(Otriv,O1)", {"A", "B_p", "C"}},
                           {"(Otriv,O2)", {"A", "B", "C_p"}},
                           {"(Otriv,O3)", {"A", "B_p", "C_p"}},
                           {"(Otriv,Ocomp)", {"A", "B_p", "C_p"}},
                           {"(O1,O1)", {"A", "C"}},
                           {"(O1,O3)", {"A", "C_p"}},
                           {"(O1,Ocomp)", {"A", "C_p"}},
                           {"(O2,O2)", {"A", "B"}},
                           {"(O2,Ocomp)", {"A", "B_p"}},
                           {"(O3,Ocomp)", {"A"}},
                           {"(Ocomp,Ocomp)", {"A"}}},
                          tag + "^2", &t);
            const auto& o3 = t.at("(O3,Ocomp)");
            c.expect(o3.route == "thm-C", tag + " (O3,Ocomp) not routed through the hull");
            c.expect(same_points(o3, t.at("(Ocomp,Ocomp)")), tag + " (O3,Ocomp) differs from (Ocomp,Ocomp)");
            auto ht = hull_transport(*o3.diagram);
            c.expect(same_points(ht, t.at("(Ocomp,Ocomp)")), tag + " hull_transport differs from (Ocomp,Ocomp)");
            c.expect(t.at("(Otriv,Otriv)").included("A", "B", "q") && t.at("(Otriv,Otriv)").included("B", "C", "q"),
                     tag + " chain A < B < C missing");
            std::vector<ShapeGraph> gs;
            for (auto& [n, tab] : t) gs.push_back(shape_graph(tab));
            size_t k = homeomorphism_classes(gs);
            c.expect(k == 7, tag + "^2 has " + std::to_string(k) + " homeomorphism classes");
            c.expect(homeomorphic(shape_graph(t.at("(O1,O1)")), shape_graph(t.at("(O2,O2)"))), tag + " (O1,O1) and (O2,O2) not homeomorphic");
        }
        return c.result(5, "constant Z tables", "3 + 12 spectra match, (O3,Ocomp) via hull, 7 homeomorphism classes");
    });
}

CriterionResult criterion_burnside_cp(const AcceptanceOptions&) {
    return guarded(6, "Burnside C_p tables", [] {
        Checker c;
        for (long p : {2L, 3L}) {
            std::string tag = "A(C_" + std::to_string(p) + ")";
            std::map<std::string, SpectrumTable> t;
            expect_tables(c, burnside_cp(p),
                          {{"(Otriv,Otriv)", {"A", "B1", "B2"}}, {"(Otriv,Ocomp)", {"A", "B2"}}, {"(Ocomp,Ocomp)", {"B2", "C"}}}, tag, &t);
            c.expect(t.at("(Otriv,Otriv)").identified(p, {"A", "B1"}), tag + " A_p = B1_p missing");
            c.expect(t.at("(Ocomp,Ocomp)").identified(p, {"B2", "C"}), tag + " C_p = B2_p missing");
            c.expect(t.at("(Otriv,Otriv)").included("B2", "B1", "q"), tag + " B2 below B1 missing");
            c.expect(t.at("(Ocomp,Ocomp)").included("C", "B2", "q"), tag + " C below B2 missing");
            c.expect(t.at("(Otriv,Ocomp)").identifications.empty(), tag + " (Otriv,Ocomp) has identifications");
            // the transfer tr(1) = t is what removes B1 at q != p
            auto T = std::make_shared<LewisDiagram>(forget_pair(burnside_cp(p), find_pair(cyclic_lattice(static_cast<int>(p)), "(Otriv,Ocomp)")));
            auto B1 = evaluate(registry_for(*T)->families[1], T, Int(p == 2 ? 3 : 2), p);
            auto v = is_ideal(B1);
            c.expect(v && v->map == "tr", tag + " B1_q is not rejected by a transfer");
        }
        return c.result(6, "Burnside C_p tables", "3 spectra with A_p=B1_p and C_p=B2_p, p=2,3");
    });
}

CriterionResult criterion_burnside_cp2(const AcceptanceOptions&) {
    return guarded(7, "Burnside C_{p^2} tables", [] {
        Checker c;
        for (long p : {2L, 3L}) {
            std::string tag = "A(C_" + std::to_string(p * p) + ")";
            std::map<std::string, SpectrumTable> t;
            expect_tables(c, burnside_cp2(p),
                          {{"(Otriv,Otriv)", {"A", "B1", "B2", "C1", "C2", "C3"}},
                           {"(Otriv,O1)", {"A", "B1", "B2", "C1", "C3"}},
                           {"(Otriv,O2)", {"A", "B2", "C2", "C3"}},
                           {"(Otriv,O3)", {"A", "B1", "B2", "C3"}},
                           {"(Otriv,Ocomp)", {"A", "B2", "C3"}},
                           {"(O1,O1)", {"A", "B1", "C1", "C3", "D"}},
                           {"(O1,O3)", {"A", "B1", "C3", "D"}},
                           {"(O1,Ocomp)", {"A", "C3", "D"}},
                           {"(O2,O2)", {"B2", "C2", "C3", "E"}},
                           {"(O2,Ocomp)", {"B2", "C3", "E"}},
                           {"(O3,Ocomp)", {"C3", "D", "F"}},
                           {"(Ocomp,Ocomp)", {"C3", "D", "G"}}},
                          tag, &t);
            const std::vector<std::pair<std::string, std::vector<std::string>>> ids = {
                {"(Otriv,Otriv)", {"A", "B1", "C1"}}, {"(Otriv,Otriv)", {"B2", "C2"}}, {"(Otriv,O1)", {"A", "B1", "C1"}},
                {"(Otriv,O2)", {"B2", "C2"}},         {"(Otriv,O3)", {"A", "B1"}},     {"(O1,O1)", {"A", "B1", "C1"}},
                {"(O1,O3)", {"A", "B1"}},             {"(O2,O2)", {"B2", "C2", "E"}},  {"(O2,Ocomp)", {"B2", "E"}},
                {"(O3,Ocomp)", {"C3", "D", "F"}},     {"(Ocomp,Ocomp)", {"C3", "D", "G"}}};
            for (const auto& [pair, names] : ids) {
                std::string all;
                for (const auto& n : names) all += n + "_p=";
                c.expect(t.at(pair).identified(p, names), tag + " " + pair + " missing " + all);
            }
            c.expect(t.at("(Otriv,Otriv)").included("B2", "B1", "q") && t.at("(Otriv,Otriv)").included("C3", "C2", "q") &&
                         t.at("(Otriv,Otriv)").included("C2", "C1", "q"),
                     tag + " coefficient system inclusions missing");
            c.expect(t.at("(O1,O1)").included("D", "C3", "q"), tag + " D below C3 missing");

            // ghost route for the {C_p, C_{p^2}} component of (O2,O2)
            auto full = std::make_shared<LewisDiagram>(forget_pair(burnside_cp2(p), find_pair(cyclic_lattice(static_cast<int>(p * p)), "(O2,O2)")));
            auto comp = restrict_levels(*full, {static_cast<int>(p), static_cast<int>(p * p)});
            auto G = ghost(comp);
            auto gc = check_ghost_map(G);
            c.expect(!gc, tag + " ghost map: " + (gc ? gc->detail : ""));
            Int q(p == 2 ? 3 : 2);
            std::vector<Submodule> tops;
            for (const auto& gp : ghost_primes(G, q)) tops.push_back(gp.pullback.at(static_cast<int>(p * p)));
            auto top_alg = comp.alg_ptr(static_cast<int>(p * p));
            for (std::string gens : {"q,t-p,u", "q,t-p,u-p^2", "q,u"}) {
                Mat m;
                for (const auto& s : parse_generators(*top_alg, gens, Int(p))) m.push_back(s.eval(q));
                auto want = ideal_from_generators(top_alg, m);
                c.expect(std::find(tops.begin(), tops.end(), want) != tops.end(), tag + " ghost pullbacks miss <" + gens + ">");
            }
            auto cd = std::make_shared<LewisDiagram>(comp);
            auto direct = prime_points(cd, q);
            auto via = ghost_spectrum(G, q);
            bool same = direct.size() == via.size();
            for (const auto& g : via)
                same = same && std::any_of(direct.begin(), direct.end(), [&](const Point& d) { return d.ideal.levels == g.ideal.levels; });
            c.expect(same, tag + " ghost catalog differs from the component primes");

            std::vector<ShapeGraph> gs;
            for (auto& [n, tab] : t) gs.push_back(shape_graph(tab));
            size_t k = homeomorphism_classes(gs);
            c.expect(k == 12, tag + " has " + std::to_string(k) + " homeomorphism classes");
        }
        return c.result(7, "Burnside C_{p^2} tables", "12 spectra with identifications, ghost route, 12 homeomorphism classes");
    });
}

CriterionResult criterion_hull_sensitivity(const AcceptanceOptions&) {
    return guarded(8, "hull sensitivity", [] {
        Checker c;
        for (long p : {2L, 3L}) {
            std::string tag = "p=" + std::to_string(p);
            auto lat = cyclic_lattice(static_cast<int>(p * p));
            auto B = burnside_cp2(p);
            auto T3 = std::make_shared<LewisDiagram>(forget_pair(B, find_pair(lat, "(O3,Ocomp)")));
            auto Tc = std::make_shared<LewisDiagram>(forget_pair(B, find_pair(lat, "(Ocomp,Ocomp)")));
            bool refused = false;
            try {
                hull_transport(*T3);
            } catch (const HullRefused&) {
                refused = true;
            }
            c.expect(refused, tag + " hull_transport did not refuse");
            auto n3 = name_set(spectrum(*T3)), nc = name_set(spectrum(*Tc));
            c.expect(n3.count("F") && !n3.count("G") && nc.count("G") && !nc.count("F"), tag + " F/G split missing");

            int top = static_cast<int>(p * p);
            Vec x = {Int(0), Int(p), Int(-1)}; // pt - u
            Vec y = {Int(p), Int(-1), Int(0)}; // p - t
            for (long q : {0L, 3L, 5L}) {
                if (q == p) continue;
                auto G3 = TambaraIdeal{T3, {}};
                auto Gc = TambaraIdeal{Tc, {}};
                for (int d : T3->levels) {
                    Mat g = q ? Mat{Vec(1, Int(q))} : Mat{};
                    auto alg = T3->alg_ptr(d);
                    Mat lifted;
                    for (auto& r : g) {
                        Vec v = zero_vec(alg->rank());
                        v[0] = r[0];
                        lifted.push_back(v);
                    }
                    G3.levels.emplace(d, ideal_from_generators(alg, lifted));
                    Gc.levels.emplace(d, ideal_from_generators(alg, lifted));
                }
                std::string qs = tag + " q=" + std::to_string(q);
                c.expect(!is_ideal(G3) && !is_ideal(Gc), qs + " G_q is not an ideal");
                c.expect(q_condition(G3, top, x, top, y) && !G3.at(top).member(x) && !G3.at(top).member(y),
                         qs + " Q(G, pt-u, p-t) fails under O3");
                c.expect(refute_primality(G3, {3, true}).has_value(), qs + " no refutation under O3");
                c.expect(!refute_primality(Gc, {3, true}).has_value(), qs + " refuted under Ocomp");
            }
        }
        return c.result(8, "hull sensitivity", "refused; F vs G; zero ideal refuted only under O3 at bound 3");
    });
}

CriterionResult criterion_cpq(const AcceptanceOptions&) {
    return guarded(9, "C_pq fiber product", [] {
        Checker c;
        auto B = burnside_cpq(2, 3);
        auto O = parse_system(B.lattice, "(1,2),(1,3)");
        auto T = forget_pair(B, {O, O});
        auto V = std::make_shared<LewisDiagram>(restrict_levels(T, {1, 2, 3}));
        auto L2 = std::make_shared<LewisDiagram>(restrict_levels(T, {1, 2}));
        auto L3 = std::make_shared<LewisDiagram>(restrict_levels(T, {1, 3}));
        Vec x = {Int(-2), Int(1)}; // x_p - p
        Vec y = {Int(-3), Int(1)}; // x_q - q
        for (long r : {0L, 2L, 3L, 5L, 7L}) {
            std::string tag = "r=" + std::to_string(r);
            auto pts = prime_points(V, Int(r));
            auto left = prime_points(L2, Int(r)), right = prime_points(L3, Int(r));
            auto scalar = [&](int d) {
                auto alg = V->alg_ptr(d);
                Vec v = zero_vec(alg->rank());
                v[0] = Int(r);
                return ideal_from_generators(alg, r ? Mat{v} : Mat{});
            };
            bool excluded = r != 2 && r != 3;
            size_t expected = 0;
            for (const auto& a : left)
                for (const auto& b : right) {
                    if (a.ideal.at(1) != b.ideal.at(1)) continue;
                    bool diagonal = a.ideal.at(2) == scalar(2) && b.ideal.at(3) == scalar(3);
                    TambaraIdeal I{V, {{1, a.ideal.at(1)}, {2, a.ideal.at(2)}, {3, b.ideal.at(3)}}};
                    bool present = std::any_of(pts.begin(), pts.end(), [&](const Point& p) { return p.ideal == I; });
                    if (excluded && diagonal) {
                        c.expect(!present, tag + " diagonal pair retained");
                        c.expect(q_condition(I, 2, x, 3, y) && !I.at(2).member(x) && !I.at(3).member(y),
                                 tag + " Q(P, x_p-p, x_q-q) fails");
                        continue;
                    }
                    ++expected;
                    c.expect(present, tag + " fiber pair missing: " + I.str());
                }
            c.expect(pts.size() == expected, tag + " has " + std::to_string(pts.size()) + " primes, want " + std::to_string(expected));
            for (const auto& p : pts) c.expect(!refute_primality(p.ideal, {2, true}), tag + " refuted retained prime " + p.ideal.str());
        }
        return c.result(9, "C_pq fiber product", "fiber product minus <r> diagonal at r=0,5,7; retained primes survive bound 2");
    });
}

CriterionResult criterion_properties(const AcceptanceOptions& opt) {
    return guarded(10, "property suites", [&] {
        Checker c;
        SampleOptions so{48, opt.seed, 6};
        std::vector<std::pair<std::string, LewisDiagram>> fulls = {
            {"Z C_2", constant_Z(2)}, {"Z C_4", constant_Z(4)}, {"A C_2", burnside_cp(2)}, {"A C_4", burnside_cp2(2)}, {"A C_9", burnside_cp2(3)}};
        size_t points = 0;
        for (const auto& [name, full] : fulls)
            for (const auto& pr : enumerate_compatible_pairs(full.lattice)) {
                auto t = spectrum(forget_pair(full, pr), {3, 24, opt.seed, 3});
                std::string tag = name + " " + pair_name(pr);
                long p = t.special[0];
                for (size_t s = 0; s < t.samples.size(); ++s)
                    for (const auto& pt : t.points[s]) {
                        ++points;
                        auto v = is_ideal(pt.ideal, so);
                        c.expect(!v, tag + " " + pt.ideal.str() + " not an ideal: " + (v ? v->map : ""));
                        auto rad = radical_audit(pt.ideal, 3);
                        c.expect(!rad, tag + " " + pt.ideal.str() + " not radical");
                        const LewisDiagram& T = *t.diagram;
                        int b = T.bottom();
                        const Submodule& bottom = pt.ideal.at(b);
                        if (!bottom.is_unit_ideal()) {
                            Mat act = T.weyl.count(b) ? T.weyl.at(b) : identity_mat(T.alg(b).rank());
                            c.expect(!find_g_prime_witness(T.alg(b), act, bottom, 3), tag + " bottom level not G-prime");
                        }
                    }
                // inclusions and identifications again at a prime outside the samples
                if (!registry_for(*t.diagram)) continue;
                Int fresh(11);
                for (const auto& inc : t.inclusions) {
                    if (inc.stratum != "q") continue;
                    auto a = family_at(t, inc.sub, fresh, p), b = family_at(t, inc.sup, fresh, p);
                    c.expect(b.contains(a) && a != b, tag + " inclusion " + inc.sub + " < " + inc.sup + " fails at q=11");
                }
                for (const auto& id : t.identifications) {
                    auto base = family_at(t, id.names[0], Int(id.prime), p);
                    for (size_t k = 1; k < id.names.size(); ++k)
                        c.expect(family_at(t, id.names[k], Int(id.prime), p) == base, tag + " identification " + id.names[0] + "=" + id.names[k]);
                }
            }

        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<int> entry(-20, 20), dim(1, 5);
        for (size_t trial = 0; trial < opt.hnf_trials; ++trial) {
            size_t rows = dim(rng), cols = std::min(dim(rng), 4);
            Mat m(rows, Vec(cols));
            for (auto& r : m)
                for (auto& e : r) e = Int(entry(rng));
            Mat h = hnf(m, cols);
            c.expect(hnf(h, cols) == h, "hnf not idempotent");
            // span preservation: adding original rows or combinations does not change the form
            Mat both = h;
            both.insert(both.end(), m.begin(), m.end());
            c.expect(hnf(both, cols) == h, "hnf changes the span");
            Vec comb = zero_vec(cols);
            for (const auto& r : m) comb = comb + Int(entry(rng)) * r;
            Mat with = h;
            with.push_back(comb);
            c.expect(hnf(with, cols) == h, "combination changes the span");
            // membership agrees with coordinates
            auto Zn = integers();
            for (size_t i = 1; i < cols; ++i) Zn = product_algebra(Zn, integers());
            Submodule s(Zn, m);
            Vec probe(cols);
            for (auto& e : probe) e = Int(entry(rng));
            auto coords = s.coordinates(probe);
            Mat probe_m = h;
            probe_m.push_back(probe);
            bool in_span = hnf(probe_m, cols) == h;
            c.expect(s.member(probe) == in_span && coords.has_value() == in_span && s.member(comb), "membership inconsistent");
            if (coords) {
                Vec back = zero_vec(cols);
                for (size_t i = 0; i < coords->size(); ++i) back = back + (*coords)[i] * s.basis()[i];
                c.expect(back == probe, "coordinates do not reproduce the vector");
            }
        }
        return c.result(10, "property suites", std::to_string(points) + " emitted primes audited, " + std::to_string(opt.hnf_trials) + " HNF trials");
    });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
    return {criterion_counts(opt),   criterion_hull(opt),          criterion_axioms(opt),          criterion_cohomological(opt),
            criterion_constant_tables(opt), criterion_burnside_cp(opt), criterion_burnside_cp2(opt), criterion_hull_sensitivity(opt),
            criterion_cpq(opt),      criterion_properties(opt)};
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " " << (r.id < 10 ? " " : "") << r.id << " " << r.title << ": " << r.detail;
    return os.str();
}

} // namespace tambara
