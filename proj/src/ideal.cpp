#include "tambara/ideal.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tambara {

const Submodule& TambaraIdeal::at(int d) const {
    auto it = levels.find(d);
    if (it == levels.end()) throw std::out_of_range("ideal has no level " + std::to_string(d));
    return it->second;
}

bool TambaraIdeal::proper() const {
    return std::any_of(levels.begin(), levels.end(), [](const auto& kv) { return !kv.second.is_unit_ideal(); });
}

bool TambaraIdeal::contains(const TambaraIdeal& o) const {
    for (const auto& [d, s] : o.levels) {
        auto it = levels.find(d);
        if (it == levels.end() || !it->second.contains(s)) return false;
    }
    return true;
}

bool TambaraIdeal::operator==(const TambaraIdeal& o) const {
    if (levels.size() != o.levels.size()) return false;
    for (const auto& [d, s] : levels) {
        auto it = o.levels.find(d);
        if (it == o.levels.end() || it->second != s) return false;
    }
    return true;
}

std::string TambaraIdeal::str() const {
    std::string out = "[";
    bool first = true;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        if (!first) out += " ; ";
        first = false;
        out += it->second.describe();
    }
    return out + "]";
}

TambaraIdeal zero_ideal(DiagramPtr T) {
    TambaraIdeal I{T, {}};
    for (int d : T->levels) I.levels.emplace(d, Submodule::zero(T->alg_ptr(d)));
    return I;
}

TambaraIdeal unit_ideal(DiagramPtr T) {
    TambaraIdeal I{T, {}};
    for (int d : T->levels) I.levels.emplace(d, Submodule::whole(T->alg_ptr(d)));
    return I;
}

TambaraIdeal levelwise_ideal(DiagramPtr T, const std::map<int, Mat>& gens) {
    TambaraIdeal I{T, {}};
    for (int d : T->levels) {
        auto it = gens.find(d);
        I.levels.emplace(d, it == gens.end() ? Submodule::zero(T->alg_ptr(d)) : ideal_from_generators(T->alg_ptr(d), it->second));
    }
    return I;
}

namespace {

bool divides_level(int K, int H) { return H % K == 0; }

// images of I under one round of the structure maps, by target level
std::map<int, Mat> one_step(const TambaraIdeal& I) {
    const LewisDiagram& T = *I.diagram;
    std::map<int, Mat> add;
    for (int H : T.levels)
        for (int K : T.levels)
            if (K != H && divides_level(K, H) && T.has_res(K, H))
                for (const auto& r : I.at(H).basis()) add[K].push_back(T.res(K, H, r));
    for (auto [K, H] : T.visible_transfers())
        for (const auto& r : I.at(K).basis()) add[H].push_back(T.tr(K, H, r));
    for (auto [K, H] : T.visible_norms())
        for (const auto& r : I.at(K).basis()) add[H].push_back(T.nm(K, H, r));
    for (int d : T.levels)
        if (!T.trivial_action(d))
            for (const auto& r : I.at(d).basis()) add[d].push_back(T.conj(d, 1, r));
    return add;
}

} // namespace

TambaraIdeal closure(const TambaraIdeal& I0) {
    TambaraIdeal I = I0;
    for (;;) {
        bool changed = false;
        for (auto& [d, rows] : one_step(I)) {
            Submodule& s = I.levels.at(d);
            Mat fresh;
            for (auto& r : rows)
                if (!s.member(r)) fresh.push_back(std::move(r));
            if (fresh.empty()) continue;
            Mat gens = s.basis();
            gens.insert(gens.end(), fresh.begin(), fresh.end());
            s = ideal_from_generators(s.algebra(), gens);
            changed = true;
        }
        if (!changed) return I;
    }
}

TambaraIdeal generate(DiagramPtr T, const std::map<int, Mat>& gens) { return closure(levelwise_ideal(std::move(T), gens)); }

TambaraIdeal rebind(const TambaraIdeal& I, DiagramPtr T) {
    TambaraIdeal out{T, {}};
    for (int d : T->levels) {
        const Submodule& s = I.at(d);
        if (s.algebra() != T->alg_ptr(d)) throw std::invalid_argument("rebind: level algebras differ");
        out.levels.emplace(d, s);
    }
    return out;
}

TambaraIdeal restrict_ideal(const TambaraIdeal& I, DiagramPtr sub) { return rebind(I, std::move(sub)); }

std::optional<IdealViolation> is_ideal(const TambaraIdeal& I, const SampleOptions& opt) {
    const LewisDiagram& T = *I.diagram;
    for (int d : T.levels)
        if (!I.at(d).is_absorbing()) return IdealViolation{"absorbing", d, d, {}, "level " + std::to_string(d) + " is not an ideal"};
    auto bad = [&](const std::string& map, int K, int H, const Vec& x, const Vec& img) {
        const Algebra& src = map == "res" ? T.alg(H) : T.alg(K);
        const Algebra& dst = map == "res" ? T.alg(K) : T.alg(H);
        std::ostringstream os;
        os << map << "(" << src.format(x) << ") = " << dst.format(img) << " not in " << (map == "res" ? I.at(K) : I.at(H)).describe();
        return IdealViolation{map, K, H, x, os.str()};
    };
    for (int H : T.levels)
        for (int K : T.levels)
            if (K != H && divides_level(K, H) && T.has_res(K, H))
                for (const auto& r : I.at(H).basis()) {
                    Vec v = T.res(K, H, r);
                    if (!I.at(K).member(v)) return bad("res", K, H, r, v);
                }
    for (auto [K, H] : T.visible_transfers())
        for (const auto& r : I.at(K).basis()) {
            Vec v = T.tr(K, H, r);
            if (!I.at(H).member(v)) return bad("tr", K, H, r, v);
        }
    for (int d : T.levels)
        if (!T.trivial_action(d))
            for (const auto& r : I.at(d).basis()) {
                Vec v = T.conj(d, 1, r);
                if (!I.at(d).member(v)) return IdealViolation{"conj", d, d, r, "conjugate of " + T.alg(d).format(r) + " escapes"};
            }
    for (auto [K, H] : T.visible_norms())
        for (const auto& r : I.at(K).basis()) {
            Vec v = T.nm(K, H, r);
            if (!I.at(H).member(v)) return bad("nm", K, H, r, v);
        }
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coef(-opt.bound, opt.bound);
    for (auto [K, H] : T.visible_norms()) {
        const Mat& rows = I.at(K).basis();
        if (rows.empty()) continue;
        for (size_t s = 0; s < opt.samples; ++s) {
            Vec x = T.alg(K).zero();
            for (const auto& r : rows) x = x + Int(coef(rng)) * r;
            x = T.alg(K).reduce(x);
            Vec v = T.nm(K, H, x);
            if (!I.at(H).member(v)) {
                auto w = bad("nm", K, H, x, v);
                w.map = "nm-audit";
                return w;
            }
        }
    }
    return std::nullopt;
}

std::vector<Translate> translates(const LewisDiagram& T, int H, const Vec& x) {
    std::map<int, std::vector<Vec>> by_level;
    for (int K : T.levels) {
        if (!divides_level(K, H) || !T.has_res(K, H)) continue;
        Vec r = T.res(K, H, x);
        long order = T.trivial_action(K) ? 1 : T.lattice.n / K;
        for (long k = 0; k < order; ++k) {
            Vec c = T.conj(K, k, r);
            for (int L : T.levels) {
                if (!divides_level(K, L) || !T.has_nm(K, L)) continue;
                Vec v = T.nm(K, L, c);
                auto& bucket = by_level[L];
                if (std::find(bucket.begin(), bucket.end(), v) == bucket.end()) bucket.push_back(std::move(v));
            }
        }
    }
    std::vector<Translate> out;
    for (auto& [L, vs] : by_level)
        for (auto& v : vs) out.push_back({L, std::move(v)});
    return out;
}

std::vector<Translate> generalized_products(const LewisDiagram& T, int H1, const Vec& x, int H2, const Vec& y) {
    auto X = translates(T, H1, x);
    auto Y = translates(T, H2, y);
    std::vector<Translate> out;
    for (const auto& a : X)
        for (const auto& b : Y)
            if (a.level == b.level) out.push_back({a.level, T.alg(a.level).mul(a.value, b.value)});
    std::stable_sort(out.begin(), out.end(), [](const Translate& a, const Translate& b) { return a.level < b.level; });
    return out;
}

bool q_condition(const TambaraIdeal& I, int H1, const Vec& x, int H2, const Vec& y) {
    const LewisDiagram& T = *I.diagram;
    auto X = translates(T, H1, x);
    auto Y = translates(T, H2, y);
    for (const auto& a : X)
        for (const auto& b : Y)
            if (a.level == b.level && !I.at(a.level).member(T.alg(a.level).mul(a.value, b.value))) return false;
    return true;
}

namespace {

std::vector<Mat> action_powers(const Algebra& alg, const Mat& action) {
    std::vector<Mat> pw{identity_mat(alg.rank())};
    Mat cur = action;
    while (cur != pw.front()) {
        pw.push_back(cur);
        cur = mat_mul(cur, action, alg.rank());
        if (pw.size() > 1024) throw std::invalid_argument("action has no small finite order");
    }
    return pw;
}

} // namespace

bool is_g_prime_witness(const Algebra& alg, const Mat& action, const Submodule& ideal, const Vec& x, const Vec& y) {
    if (ideal.member(x) || ideal.member(y)) return false;
    for (const auto& g : action_powers(alg, action))
        if (!ideal.member(alg.mul(x, alg.reduce(apply(g, y, alg.rank()))))) return false;
    return true;
}

std::optional<std::pair<Vec, Vec>> find_g_prime_witness(const Algebra& alg, const Mat& action, const Submodule& ideal,
                                                        int bound) {
    auto pw = action_powers(alg, action);
    std::vector<Vec> outside;
    for (auto& v : box_elements(alg.rank(), bound))
        if (!ideal.member(v)) outside.push_back(std::move(v));
    for (size_t i = 0; i < outside.size(); ++i)
        for (size_t j = i; j < outside.size(); ++j) {
            bool all = true;
            for (const auto& g : pw)
                if (!ideal.member(alg.mul(outside[i], alg.reduce(apply(g, outside[j], alg.rank()))))) {
                    all = false;
                    break;
                }
            if (all) return std::make_pair(outside[i], outside[j]);
        }
    return std::nullopt;
}

std::optional<RadicalWitness> radical_audit(const TambaraIdeal& I, int bound) {
    const LewisDiagram& T = *I.diagram;
    for (int d : T.levels) {
        const Submodule& s = I.at(d);
        if (s.is_unit_ideal()) continue;
        const Algebra& a = T.alg(d);
        for (const auto& x : box_elements(a.rank(), bound)) {
            Vec xr = a.reduce(x);
            if (s.member(xr)) continue;
            Vec x2 = a.mul(xr, xr);
            if (s.member(x2)) return RadicalWitness{d, xr, 2};
            if (s.member(a.mul(x2, xr))) return RadicalWitness{d, xr, 3};
        }
    }
    return std::nullopt;
}

TambaraIdeal extend_component_prime(DiagramPtr T, const TambaraIdeal& J) {
    TambaraIdeal out{T, {}};
    for (int K : T->levels) {
        auto it = J.levels.find(K);
        if (it != J.levels.end()) {
            out.levels.emplace(K, it->second);
            continue;
        }
        std::optional<Submodule> s;
        for (const auto& [L, JL] : J.levels) {
            if (!divides_level(L, K)) continue;
            Submodule pre = preimage(T->res_map(L, K), JL);
            s = s ? intersect(*s, pre) : pre;
        }
        out.levels.emplace(K, s ? *s : Submodule::whole(T->alg_ptr(K)));
    }
    return out;
}

std::vector<Vec> box_elements(size_t rank, int bound) {
    std::vector<Int> values{Int(0)};
    for (int b = 1; b <= bound; ++b) {
        values.push_back(Int(b));
        values.push_back(Int(-b));
    }
    size_t base = values.size(), total = 1;
    for (size_t i = 0; i < rank; ++i) total *= base;
    std::vector<Vec> out;
    out.reserve(total);
    std::vector<size_t> digit(rank, 0);
    for (size_t n = 0; n < total; ++n) {
        Vec v(rank);
        for (size_t i = 0; i < rank; ++i) v[i] = values[digit[i]];
        out.push_back(std::move(v));
        for (size_t i = rank; i-- > 0;) {
            if (++digit[i] < base) break;
            digit[i] = 0;
        }
    }
    return out;
}

} // namespace tambara
