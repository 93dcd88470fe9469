#include "tambara/spectra.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace tambara {

ShapeGraph shape_graph(const SpectrumTable& t) {
    ShapeGraph g;
    std::vector<size_t> used;
    bool generic_done = false;
    for (size_t s = 0; s < t.samples.size(); ++s) {
        if (t.samples[s].stratum == "generic") {
            if (generic_done) continue;
            generic_done = true;
        }
        used.push_back(s);
        g.strata.push_back(t.samples[s].stratum);
    }
    std::vector<std::pair<size_t, size_t>> where; // (used index, point)
    for (size_t u = 0; u < used.size(); ++u)
        for (size_t i = 0; i < t.points[used[u]].size(); ++i) {
            where.push_back({u, i});
            g.stratum.push_back(static_cast<int>(u));
            const auto& names = t.point_names.empty() ? std::vector<std::string>{} : t.point_names[used[u]][i];
            g.label.push_back(names.empty() ? t.points[used[u]][i].ideal.str() : names.front());
        }
    size_t n = where.size();
    g.edge.assign(n, std::vector<bool>(n, false));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            auto [ua, ia] = where[a];
            auto [ub, ib] = where[b];
            const auto& A = t.points[used[ua]][ia].ideal;
            const auto& B = t.points[used[ub]][ib].ideal;
            if (ua == ub) {
                g.edge[a][b] = B.contains(A) && A != B;
            } else if (t.samples[used[ua]].q.is_zero()) {
                // closure of a characteristic-zero point: integral containment
                // suffices since every level of B contains q
                g.edge[a][b] = B.contains(A);
            }
        }
    return g;
}

bool homeomorphic(const ShapeGraph& a, const ShapeGraph& b) {
    if (a.size() != b.size() || a.strata.size() != b.strata.size()) return false;
    size_t n = a.size();
    auto profile = [](const ShapeGraph& g, size_t v) {
        size_t in = 0, out = 0;
        for (size_t w = 0; w < g.size(); ++w) {
            in += g.edge[w][v];
            out += g.edge[v][w];
        }
        return std::tuple<int, size_t, size_t>(g.stratum[v], in, out);
    };
    std::vector<std::tuple<int, size_t, size_t>> pa, pb;
    for (size_t v = 0; v < n; ++v) {
        pa.push_back(profile(a, v));
        pb.push_back(profile(b, v));
    }
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> taken(n, false);
    std::function<bool(size_t)> place = [&](size_t v) {
        if (v == n) return true;
        for (size_t w = 0; w < n; ++w) {
            if (taken[w] || pa[v] != pb[w]) continue;
            bool ok = true;
            for (size_t u = 0; u < v && ok; ++u)
                ok = a.edge[u][v] == b.edge[map[u]][w] && a.edge[v][u] == b.edge[w][map[u]];
            if (!ok) continue;
            map[v] = static_cast<int>(w);
            taken[w] = true;
            if (place(v + 1)) return true;
            taken[w] = false;
        }
        map[v] = -1;
        return false;
    };
    return place(0);
}

} // namespace tambara
