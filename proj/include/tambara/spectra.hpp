#pragma once

#include "tambara/construct.hpp"
#include "tambara/ideal.hpp"
#include "tambara/kernels.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tambara {

// ---- concrete primes ----

// A prime at a fixed value of q, with how it was obtained.
struct Point {
    TambaraIdeal ideal;
    std::string lineage;    // q-independent description of the route
    std::string provenance; // thm-A, thm-B, thm-C, ghost, search, fiber
};

struct LevelPrime {
    Submodule ideal;
    std::string lineage;
};

// Primes of a ring over q: kernels of the characters reduced mod q, made
// invariant under the automorphism `action` (G-primes) when one is given.
std::vector<LevelPrime> ring_primes(AlgebraPtr alg, const Int& q, const Mat* action = nullptr);

struct GhostPrime {
    int kind;                 // 1: (a ; Phi), 2: (nm^-1 b ; b)
    TambaraIdeal ghost_ideal; // in G.ghost
    TambaraIdeal pullback;    // in G.base, along the ghost map
    std::string lineage;
};

std::vector<GhostPrime> ghost_primes(const GhostDiagram& G, const std::vector<LevelPrime>& fixed_catalog,
                                     const std::vector<LevelPrime>& phi_catalog);
std::vector<GhostPrime> ghost_primes(const GhostDiagram& G, const Int& q);
// deduplicated pullbacks
std::vector<Point> ghost_spectrum(const GhostDiagram& G, const Int& q);

struct SpectrumOptions {
    int bound = 3;            // refutation box
    size_t audit_samples = 24; // sampled norm audit inside is_ideal
    uint64_t seed = 20240601;
    size_t generic_samples = 3;
};

class HullRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Prime ideals of T at q for T's visible pair. Dispatch: saturated Om goes
// through the path components (ring catalog, ghost, search or fiber product
// per component), extension I(J) and a transfer filter; otherwise a
// multiplicatively cohomological T uses the saturated hull; otherwise the
// top level is searched between bounds forced by the primes below.
std::vector<Point> prime_points(DiagramPtr T, const Int& q, const SpectrumOptions& opt = {});

// Thm A only: primes for the pair (Om, Om) of a saturated Om, given as the
// union over path components of extended leaf primes
std::vector<Point> spectrum_self_compatible(DiagramPtr T, const Int& q, const SpectrumOptions& opt = {});

// levels/edges visible in T
std::vector<std::vector<int>> level_components(const LewisDiagram& T);
bool level_saturated(const LewisDiagram& T);

// ---- families and tables ----

struct Sample {
    Int q;
    std::string stratum; // "0", "p=2", "generic"
    bool special() const { return stratum != "generic"; }
};

// 0, the special primes, then the smallest primes avoiding them
std::vector<Sample> default_samples(const std::vector<long>& special, size_t generic);

struct FamilyTemplate {
    std::string name;
    std::vector<std::string> levels; // generator lists, top level first
    std::map<long, std::vector<std::string>> overrides; // at q = that prime
};

struct FamilyRegistry {
    std::string construction;
    std::vector<FamilyTemplate> families; // ordered as in the tables
};

// built-in templates for constantZ and Burnside over C_p, C_{p^2}; nullopt
// for other constructions (families then get synthesized names)
std::optional<FamilyRegistry> registry_for(const LewisDiagram& T);
TambaraIdeal evaluate(const FamilyTemplate& f, DiagramPtr T, const Int& q, long p);

struct PrimeFamily {
    std::string name;
    std::vector<std::string> levels; // templates, or concrete generators at one sample
    std::string stratum;             // "all", "q=p", "q!=p", "q=<r>"
    std::string provenance;
};

struct Identification {
    long prime;
    std::vector<std::string> names;
};

struct Inclusion {
    std::string sub, sup;
    std::string stratum; // "q" (all generic samples) or a special prime "p=2"
};

struct SpectrumTable {
    DiagramPtr diagram;
    std::vector<long> special;
    std::vector<Sample> samples;
    std::vector<std::vector<Point>> points; // per sample
    std::string route;

    // filled by assemble
    std::vector<std::vector<std::vector<std::string>>> point_names; // [sample][point]
    std::vector<PrimeFamily> families;
    std::vector<Identification> identifications;
    std::vector<Inclusion> inclusions;

    std::vector<std::string> family_names() const;
    const PrimeFamily* family(const std::string& name) const;
    bool identified(long prime, const std::vector<std::string>& names) const;
    bool included(const std::string& sub, const std::string& sup, const std::string& stratum) const;
};

// names points through the registry, groups unknown points by lineage
void assemble(SpectrumTable& table);

SpectrumTable spectrum(const LewisDiagram& T, const SpectrumOptions& opt = {});
// keeps the points still closed under the larger additive system (Thm B)
SpectrumTable add_transfers(const SpectrumTable& table, const TransferSystem& Oa, const SpectrumOptions& opt = {});
// spectrum for (Hull(Om), Oa) relabeled to T's pair; throws HullRefused
// unless T is multiplicatively cohomological
SpectrumTable hull_transport(const LewisDiagram& T, const SpectrumOptions& opt = {});

// ---- shape ----

// vertices: points at q = 0, at each special prime, and at the first generic
// sample; edges: strict inclusion within a sample, and q = 0 points below
// points of other samples
struct ShapeGraph {
    std::vector<std::string> strata;
    std::vector<int> stratum; // per vertex
    std::vector<std::string> label;
    std::vector<std::vector<bool>> edge;
    size_t size() const { return label.size(); }
};

ShapeGraph shape_graph(const SpectrumTable& table);
// stratum-preserving isomorphism, exhaustive
bool homeomorphic(const ShapeGraph& a, const ShapeGraph& b);

} // namespace tambara
