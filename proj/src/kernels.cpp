#include "tambara/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include <omp.h>

namespace tambara {

std::vector<Vec> refute_candidates(const LewisDiagram& T, int H, const RefuteOptions& opt) {
    const Algebra& a = T.alg(H);
    std::vector<Vec> out;
    for (auto& v : box_elements(a.rank(), opt.bound)) {
        Vec r = a.reduce(v);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
    if (opt.restriction_kernels)
        for (int K : T.levels)
            if (K != H && H % K == 0 && T.has_res(K, H)) {
                Submodule ker = kernel(T.res_map(K, H));
                for (const auto& r : ker.basis())
                    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
            }
    return out;
}

namespace {

// candidates outside I with their translates bucketed by level position
struct LevelData {
    int H;
    std::vector<Vec> elems;
    std::vector<std::vector<std::vector<Vec>>> tr; // [elem][level pos]
};

struct Prepared {
    const TambaraIdeal* I;
    std::vector<LevelData> levels;
};

Prepared prepare(const TambaraIdeal& I, const RefuteOptions& opt, bool parallel) {
    if (!I.proper()) throw std::invalid_argument("refute_primality: ideal is not proper");
    const LewisDiagram& T = *I.diagram;
    Prepared P{&I, {}};
    for (int H : T.levels) {
        LevelData L{H, {}, {}};
        for (auto& v : refute_candidates(T, H, opt))
            if (!I.at(H).member(v)) L.elems.push_back(std::move(v));
        L.tr.resize(L.elems.size());
        long n = static_cast<long>(L.elems.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
        for (long i = 0; i < n; ++i) {
            auto& b = L.tr[i];
            b.resize(T.levels.size());
            for (auto& t : translates(T, H, L.elems[i])) {
                size_t pos = std::find(T.levels.begin(), T.levels.end(), t.level) - T.levels.begin();
                b[pos].push_back(std::move(t.value));
            }
        }
        P.levels.push_back(std::move(L));
    }
    return P;
}

bool q_holds(const Prepared& P, const std::vector<std::vector<Vec>>& X, const std::vector<std::vector<Vec>>& Y) {
    const LewisDiagram& T = *P.I->diagram;
    for (size_t l = 0; l < X.size(); ++l) {
        if (X[l].empty() || Y[l].empty()) continue;
        int L = T.levels[l];
        const Algebra& a = T.alg(L);
        const Submodule& s = P.I->at(L);
        for (const auto& u : X[l])
            for (const auto& v : Y[l])
                if (!s.member(a.mul(u, v))) return false;
    }
    return true;
}

} // namespace

std::optional<PrimalityWitness> refute_primality_serial(const TambaraIdeal& I, const RefuteOptions& opt) {
    Prepared P = prepare(I, opt, false);
    for (size_t i = 0; i < P.levels.size(); ++i)
        for (size_t j = i; j < P.levels.size(); ++j) {
            const auto& A = P.levels[i];
            const auto& B = P.levels[j];
            for (size_t xi = 0; xi < A.elems.size(); ++xi)
                for (size_t yj = (i == j ? xi : 0); yj < B.elems.size(); ++yj)
                    if (q_holds(P, A.tr[xi], B.tr[yj])) return PrimalityWitness{A.H, A.elems[xi], B.H, B.elems[yj]};
        }
    return std::nullopt;
}

std::optional<PrimalityWitness> refute_primality_parallel(const TambaraIdeal& I, const RefuteOptions& opt) {
    Prepared P = prepare(I, opt, true);
    for (size_t i = 0; i < P.levels.size(); ++i)
        for (size_t j = i; j < P.levels.size(); ++j) {
            const auto& A = P.levels[i];
            const auto& B = P.levels[j];
            long nx = static_cast<long>(A.elems.size());
            std::atomic<long> best{nx};
            long best_y = -1;
#pragma omp parallel for schedule(dynamic, 1)
            for (long xi = 0; xi < nx; ++xi) {
                if (xi >= best.load(std::memory_order_relaxed)) continue;
                for (size_t yj = (i == j ? xi : 0); yj < B.elems.size(); ++yj) {
                    if (xi >= best.load(std::memory_order_relaxed)) break;
                    if (q_holds(P, A.tr[xi], B.tr[yj])) {
#pragma omp critical(refute_best)
                        if (xi < best.load()) {
                            best.store(xi);
                            best_y = static_cast<long>(yj);
                        }
                        break;
                    }
                }
            }
            if (best.load() < nx) return PrimalityWitness{A.H, A.elems[best.load()], B.H, B.elems[best_y]};
        }
    return std::nullopt;
}

std::optional<PrimalityWitness> refute_primality(const TambaraIdeal& I, const RefuteOptions& opt) {
    if (omp_get_max_threads() > 1) return refute_primality_parallel(I, opt);
    return refute_primality_serial(I, opt);
}

} // namespace tambara
