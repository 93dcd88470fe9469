#pragma once

#include "tambara/tambara.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tambara {

// Levelwise ideals of a Lewis diagram; closure under the structure maps is
// checked by is_ideal or produced by generate/closure.
struct TambaraIdeal {
    DiagramPtr diagram;
    std::map<int, Submodule> levels;

    const Submodule& at(int d) const;
    bool proper() const;
    // levelwise o <= *this
    bool contains(const TambaraIdeal& o) const;
    bool operator==(const TambaraIdeal& o) const;
    bool operator!=(const TambaraIdeal& o) const { return !(*this == o); }
    // "[<q,t> ; (1)]", top level first
    std::string str() const;
};

TambaraIdeal zero_ideal(DiagramPtr T);
TambaraIdeal unit_ideal(DiagramPtr T);
// levelwise ring ideals generated by gens, no closure under structure maps
TambaraIdeal levelwise_ideal(DiagramPtr T, const std::map<int, Mat>& gens);
// smallest ideal containing gens and closed under the visible maps
TambaraIdeal generate(DiagramPtr T, const std::map<int, Mat>& gens);
TambaraIdeal closure(const TambaraIdeal& I);
// same submodules viewed in a diagram with the same level algebras
TambaraIdeal rebind(const TambaraIdeal& I, DiagramPtr T);
// restriction of I to a subset of its levels
TambaraIdeal restrict_ideal(const TambaraIdeal& I, DiagramPtr sub);

struct IdealViolation {
    std::string map; // absorbing, res, tr, conj, nm, nm-audit
    int K = 0, H = 0;
    Vec witness;
    std::string detail;
};

// res/tr/conj exactly on HNF rows, nm on HNF rows plus a seeded audit
std::optional<IdealViolation> is_ideal(const TambaraIdeal& I, const SampleOptions& opt = {});

struct Translate {
    int level;
    Vec value;
};

// nm_K^L c_g res_K^H x over the visible norms, deduplicated per level,
// ordered by level and then by (K, g)
std::vector<Translate> translates(const LewisDiagram& T, int H, const Vec& x);

// products of a translate of x with a translate of y at a common level
std::vector<Translate> generalized_products(const LewisDiagram& T, int H1, const Vec& x, int H2, const Vec& y);
bool q_condition(const TambaraIdeal& I, int H1, const Vec& x, int H2, const Vec& y);

// x * (g^k y) in ideal for every power of the automorphism `action`
bool is_g_prime_witness(const Algebra& alg, const Mat& action, const Submodule& ideal, const Vec& x, const Vec& y);
std::optional<std::pair<Vec, Vec>> find_g_prime_witness(const Algebra& alg, const Mat& action, const Submodule& ideal,
                                                        int bound);

struct RadicalWitness {
    int level;
    Vec x;
    unsigned power;
};
// x outside I with x^2 or x^3 inside, coefficients in [-bound, bound]
std::optional<RadicalWitness> radical_audit(const TambaraIdeal& I, int bound);

// I(J) for a prime J on a sub-diagram (a path component): J on its levels,
// elsewhere the intersection of res-preimages of J over levels below, or (1)
TambaraIdeal extend_component_prime(DiagramPtr T, const TambaraIdeal& J);

// coefficient vectors in [-bound, bound]^rank ordered 0, 1, -1, 2, -2, ...
// with the first coordinate most significant
std::vector<Vec> box_elements(size_t rank, int bound);

} // namespace tambara
