#pragma once

#include "tambara/tambara.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tambara {

// Burnside Tambara functor of C_n with the complete pair. Level d has basis
// [C_d/K] for K | d, ordered by index; norms are computed through marks.
LewisDiagram burnside(int n);
LewisDiagram burnside_cp(long p);
LewisDiagram burnside_cp2(long p);
LewisDiagram burnside_cpq(long p, long q);

// nm_p^{p^2}(a + b t) in A(C_{p^2}) by the closed Mazur-style formula,
// independent of the marks route
Vec mazur_norm(long p, const Int& a, const Int& b);

// constant fixed point functor: Z at each level
LewisDiagram constant_Z(int n);

// subring of the Burnside functor spanned by the O_a-admissible orbits
LewisDiagram initial_burnside(int n, const CompatiblePair& pair);

// two levels K < H, with the transfer K -> H
Quotient geometric_fixed_points(const LewisDiagram& T, int K, int H);

struct GhostDiagram {
    LewisDiagram base;  // the two-level diagram
    LewisDiagram ghost; // levels K (unchanged) and H (fixed subring x Phi)
    int K = 0, H = 0;
    FixedSubring fixed;
    Quotient phi;
    LinearMap ghost_top; // T(H) -> fixed x Phi
    LinearMap nm_bar;    // T(K) -> Phi, the norm modulo transfers
    long weyl_step = 1;  // power of the generator of C_n generating H/K
};

GhostDiagram ghost(const LewisDiagram& T);
// ghost map commutes with res, tr, nm (sampled)
CheckResult check_ghost_map(const GhostDiagram& G, const SampleOptions& opt = {});

// Parsed construction selector such as "burnside:p=2,n=2".
struct ConstructionSpec {
    std::string kind; // burnside, constantZ, initial
    std::vector<long> primes;
    int exponent = 1; // n in p^n
    int order() const;
    std::string str() const;
};

ConstructionSpec parse_construction(const std::string& text, const std::vector<long>& fallback_primes = {});
// builds the diagram; initial needs a pair, others are complete and then
// forgotten to `pair` when given
LewisDiagram build(const ConstructionSpec& spec, const std::optional<CompatiblePair>& pair = std::nullopt);

} // namespace tambara
