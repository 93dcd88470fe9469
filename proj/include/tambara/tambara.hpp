#pragma once

#include "tambara/transfer.hpp"
#include "tambara/zalg.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace tambara {

struct NormMap {
    std::function<Vec(const Vec&)> fn;
    std::string formula; // "marks", "power", ... ; "opaque" for user norms
};

// A bi-incomplete Tambara functor over C_n, given levelwise. The maps stored
// in res_all/tr_all/nm_all are everything the construction knows; the pair
// decides which transfers and norms are visible.
struct LewisDiagram {
    SubgroupLattice lattice;
    CompatiblePair pair;
    std::vector<int> levels; // retained subgroups, ascending
    std::map<int, AlgebraPtr> level;
    std::map<int, Mat> weyl; // action of the image of the generator of C_n
    std::map<Edge, Mat> res_all;
    std::map<Edge, Mat> tr_all;
    std::map<Edge, NormMap> nm_all;
    std::string construction;

    bool has_level(int d) const { return level.count(d) > 0; }
    const Algebra& alg(int d) const;
    AlgebraPtr alg_ptr(int d) const;
    bool has_res(int K, int H) const;
    bool has_tr(int K, int H) const;
    bool has_nm(int K, int H) const;
    Vec res(int K, int H, const Vec& x) const;
    Vec tr(int K, int H, const Vec& x) const;
    Vec nm(int K, int H, const Vec& x) const;
    // action of g^k, g the generator of C_n
    Vec conj(int d, long k, const Vec& x) const;
    bool trivial_action(int d) const;
    LinearMap res_map(int K, int H) const;
    LinearMap tr_map(int K, int H) const;
    std::vector<Edge> visible_transfers() const;
    std::vector<Edge> visible_norms() const;
    int top() const { return levels.back(); }
    int bottom() const { return levels.front(); }
};

using DiagramPtr = std::shared_ptr<const LewisDiagram>;

struct CheckFailure {
    std::string check;
    std::string detail;
};
using CheckResult = std::optional<CheckFailure>;

struct SampleOptions {
    size_t samples = 200;
    uint64_t seed = 20240601;
    int bound = 10;
};

Vec random_element(const Algebra& a, std::mt19937_64& rng, int bound);

// level algebras valid, res ring maps, functoriality, Weyl actions
CheckResult check_structure(const LewisDiagram& T, const SampleOptions& opt = {});
CheckResult check_frobenius(const LewisDiagram& T, const SampleOptions& opt = {});
CheckResult check_double_coset(const LewisDiagram& T, const SampleOptions& opt = {});
CheckResult check_tambara_reciprocity(const LewisDiagram& T, const SampleOptions& opt = {});
// all of the above
CheckResult check_axioms(const LewisDiagram& T, const SampleOptions& opt = {});

struct CohomologicalWitness {
    int K, H;
    Vec x;
    std::string detail;
};

struct CohomologicalReport {
    std::optional<CohomologicalWitness> additive_failure;
    std::optional<CohomologicalWitness> multiplicative_failure;
    bool additive() const { return !additive_failure; }
    bool multiplicative() const { return !multiplicative_failure; }
};

CohomologicalReport cohomological(const LewisDiagram& T);

LewisDiagram forget_pair(const LewisDiagram& T, const CompatiblePair& sub);
// any compatible pair whose maps the construction stores (e.g. a larger one)
LewisDiagram with_pair(const LewisDiagram& T, const CompatiblePair& pr);
LewisDiagram restrict_component(const LewisDiagram& T, const PathComponent& component);
// restriction to an arbitrary set of levels (used for sub-diagrams)
LewisDiagram restrict_levels(const LewisDiagram& T, const std::vector<int>& levels);

} // namespace tambara
