#include "tambara/transfer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace tambara {

TransferSystem::TransferSystem(SubgroupLattice lat, const std::set<Edge>& pairs) : lat_(std::move(lat)), pairs_(pairs) {
    for (int d : lat_.subgroups) pairs_.insert({d, d});
}

std::vector<Edge> TransferSystem::nontrivial_pairs() const {
    std::vector<Edge> out;
    for (const auto& e : pairs_)
        if (e.first != e.second) out.push_back(e);
    return out;
}

bool TransferSystem::subset_of(const TransferSystem& o) const {
    return std::includes(o.pairs_.begin(), o.pairs_.end(), pairs_.begin(), pairs_.end());
}

std::string TransferSystem::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [K, H] : nontrivial_pairs()) {
        os << (first ? "" : ",") << '(' << K << ',' << H << ')';
        first = false;
    }
    os << '}';
    return os.str();
}

std::optional<AxiomViolation> validate_transfer_system(const SubgroupLattice& lat, const std::set<Edge>& raw) {
    std::set<Edge> pairs = raw;
    for (int d : lat.subgroups) pairs.insert({d, d});
    for (const auto& [K, H] : pairs) {
        lat.require(K);
        lat.require(H);
        if (H % K != 0)
            return AxiomViolation{"divisibility", {{K, H}}, "(" + std::to_string(K) + "," + std::to_string(H) + ") with K not a subgroup of H"};
    }
    for (const auto& [K, L] : pairs)
        for (const auto& [L2, H] : pairs)
            if (L == L2 && !pairs.count({K, H}))
                return AxiomViolation{"transitivity", {{K, L}, {L, H}}, "missing (" + std::to_string(K) + "," + std::to_string(H) + ")"};
    for (const auto& [K, H] : pairs)
        for (int L : lat.subgroups) {
            if (H % L != 0) continue;
            int g = std::gcd(K, L);
            if (!pairs.count({g, L}))
                return AxiomViolation{"restriction", {{K, H}, {g, L}},
                                      "restricting to L=" + std::to_string(L) + " forces (" + std::to_string(g) + "," + std::to_string(L) + ")"};
        }
    return std::nullopt;
}

TransferSystem make_transfer_system(const SubgroupLattice& lat, const std::set<Edge>& pairs) {
    if (auto v = validate_transfer_system(lat, pairs)) throw std::invalid_argument("not a transfer system: " + v->axiom + ": " + v->message);
    return TransferSystem(lat, pairs);
}

namespace {

// transitivity and restriction closure, in place
void close_axioms(const SubgroupLattice& lat, std::set<Edge>& pairs) {
    for (int d : lat.subgroups) pairs.insert({d, d});
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Edge> add;
        for (const auto& [K, L] : pairs)
            for (const auto& [L2, H] : pairs)
                if (L == L2 && !pairs.count({K, H})) add.push_back({K, H});
        for (const auto& [K, H] : pairs)
            for (int L : lat.subgroups)
                if (H % L == 0 && !pairs.count({std::gcd(K, L), L})) add.push_back({std::gcd(K, L), L});
        for (const auto& e : add) changed |= pairs.insert(e).second;
    }
}

} // namespace

TransferSystem generate_transfer_system(const SubgroupLattice& lat, const std::set<Edge>& pairs) {
    std::set<Edge> p = pairs;
    for (const auto& [K, H] : p)
        if (!lat.contains(K, H)) throw std::invalid_argument("pair does not satisfy K | H");
    close_axioms(lat, p);
    return TransferSystem(lat, p);
}

TransferSystem trivial_system(const SubgroupLattice& lat) { return TransferSystem(lat, {}); }

TransferSystem complete_system(const SubgroupLattice& lat) {
    std::set<Edge> p;
    for (const auto& e : candidate_edges(lat)) p.insert(e);
    return TransferSystem(lat, p);
}

std::vector<Edge> candidate_edges(const SubgroupLattice& lat) {
    std::vector<Edge> out;
    for (int K : lat.subgroups)
        for (int H : lat.subgroups)
            if (K != H && H % K == 0) out.push_back({K, H});
    return out;
}

std::vector<TransferSystem> enumerate_transfer_systems(const SubgroupLattice& lat) {
    auto edges = candidate_edges(lat);
    if (edges.size() > 24) throw std::invalid_argument("lattice too large for exhaustive enumeration");
    std::vector<TransferSystem> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << edges.size()); ++mask) {
        std::set<Edge> pairs;
        for (size_t i = 0; i < edges.size(); ++i)
            if (mask >> i & 1u) pairs.insert(edges[i]);
        if (!validate_transfer_system(lat, pairs)) out.emplace_back(lat, pairs);
    }
    return out;
}

bool is_saturated(const TransferSystem& ts) {
    const auto& lat = ts.lattice();
    for (const auto& [K, H] : ts.pairs())
        for (int L : lat.subgroups)
            if (L % K == 0 && H % L == 0 && !ts.contains(L, H)) return false;
    return true;
}

TransferSystem saturated_hull(const TransferSystem& ts) {
    const auto& lat = ts.lattice();
    std::set<Edge> p = ts.pairs();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Edge> add;
        for (int A : lat.subgroups)
            for (int B : lat.subgroups)
                for (int C : lat.subgroups) {
                    if (B % A != 0 || C % B != 0) continue;
                    int have = p.count({A, B}) + p.count({B, C}) + p.count({A, C});
                    if (have != 2) continue;
                    for (const Edge& e : {Edge{A, B}, Edge{B, C}, Edge{A, C}})
                        if (!p.count(e)) add.push_back(e);
                }
        for (const auto& e : add) changed |= p.insert(e).second;
        size_t before = p.size();
        close_axioms(lat, p);
        changed |= p.size() != before;
    }
    return TransferSystem(lat, p);
}

std::optional<CompatibilityViolation> check_compatible_pair(const TransferSystem& Om, const TransferSystem& Oa) {
    if (!(Om.lattice() == Oa.lattice())) throw std::invalid_argument("transfer systems on different groups");
    const auto& lat = Om.lattice();
    for (int A : lat.subgroups)
        for (int B : lat.subgroups) {
            if (A % B != 0 || !Om.contains(B, A)) continue;
            for (int C : lat.subgroups) {
                if (A % C != 0) continue;
                if (Oa.contains(std::gcd(B, C), B) && !Oa.contains(C, A)) return CompatibilityViolation{B, C, A};
            }
        }
    return std::nullopt;
}

bool is_compatible_pair(const TransferSystem& Om, const TransferSystem& Oa) { return !check_compatible_pair(Om, Oa); }

CompatiblePair make_compatible_pair(const TransferSystem& Om, const TransferSystem& Oa) {
    if (auto v = check_compatible_pair(Om, Oa))
        throw std::invalid_argument("not a compatible pair: B=" + std::to_string(v->B) + " C=" + std::to_string(v->C) +
                                    " A=" + std::to_string(v->A));
    return {Om, Oa};
}

std::vector<CompatiblePair> enumerate_compatible_pairs(const SubgroupLattice& lat) {
    auto systems = enumerate_transfer_systems(lat);
    std::vector<CompatiblePair> out;
    for (const auto& m : systems)
        for (const auto& a : systems)
            if (is_compatible_pair(m, a)) out.push_back({m, a});
    return out;
}

std::vector<PathComponent> path_components(const TransferSystem& ts) {
    const auto& subs = ts.lattice().subgroups;
    std::map<int, int> parent;
    for (int d : subs) parent[d] = d;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [K, H] : ts.nontrivial_pairs()) parent[find(K)] = find(H);
    std::map<int, std::vector<int>> groups;
    for (int d : subs) groups[find(d)].push_back(d);
    std::vector<PathComponent> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        int minimum = members.front();
        for (int m : members)
            if (m % minimum != 0) throw std::logic_error("path component without a unique minimum");
        out.push_back({minimum, members});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.minimum < b.minimum; });
    return out;
}

namespace {

std::optional<long> square_prime(int n) {
    auto f = prime_factors(n);
    if (f.size() == 1 && static_cast<long>(n) == f[0] * f[0]) return f[0];
    return std::nullopt;
}

} // namespace

std::optional<std::string> system_name(const TransferSystem& ts) {
    const auto& lat = ts.lattice();
    if (ts == trivial_system(lat)) return "Otriv";
    if (ts == complete_system(lat)) return "Ocomp";
    if (auto p = square_prime(lat.n)) {
        int P = static_cast<int>(*p), N = lat.n;
        if (ts == TransferSystem(lat, {{1, P}})) return "O1";
        if (ts == TransferSystem(lat, {{P, N}})) return "O2";
        if (ts == TransferSystem(lat, {{1, P}, {1, N}})) return "O3";
    }
    return std::nullopt;
}

TransferSystem parse_system(const SubgroupLattice& lat, const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text == "Otriv" || text == "triv") return trivial_system(lat);
    if (text == "Ocomp" || text == "comp") return complete_system(lat);
    if (text == "O1" || text == "O2" || text == "O3") {
        auto p = square_prime(lat.n);
        if (!p) throw std::invalid_argument(text + " is only defined on C_{p^2}");
        int P = static_cast<int>(*p), N = lat.n;
        if (text == "O1") return make_transfer_system(lat, {{1, P}});
        if (text == "O2") return make_transfer_system(lat, {{P, N}});
        return make_transfer_system(lat, {{1, P}, {1, N}});
    }
    std::set<Edge> pairs;
    std::regex pair_re(R"((\d+)[:>](\d+)|\((\d+),(\d+)\))");
    std::string rest = text;
    for (std::sregex_iterator it(text.begin(), text.end(), pair_re), end; it != end; ++it) {
        const auto& m = *it;
        int K = std::stoi(m[1].matched ? m[1].str() : m[3].str());
        int H = std::stoi(m[2].matched ? m[2].str() : m[4].str());
        pairs.insert({K, H});
    }
    std::string stripped = std::regex_replace(text, pair_re, "");
    stripped = std::regex_replace(stripped, std::regex(R"([{}\[\],/;])"), "");
    if (!stripped.empty()) throw std::invalid_argument("cannot parse transfer system: " + raw);
    return make_transfer_system(lat, pairs);
}

std::string pair_name(const CompatiblePair& pr) {
    auto nm = [](const TransferSystem& t) { return system_name(t).value_or(t.str()); };
    return "(" + nm(pr.mult) + "," + nm(pr.add) + ")";
}

} // namespace tambara
