#pragma once

#include "tambara/ideal.hpp"

#include <optional>
#include <vector>

namespace tambara {

struct PrimalityWitness {
    int H1;
    Vec x;
    int H2;
    Vec y;
};

struct RefuteOptions {
    int bound = 3;
    // also try the lattice generators of ker(res_K^H), which the box misses
    // once the prime is larger than the bound
    bool restriction_kernels = true;
};

// elements tried at level H: the coefficient box, then kernel generators
std::vector<Vec> refute_candidates(const LewisDiagram& T, int H, const RefuteOptions& opt);

// First pair (x, y), both outside I, with Q(I, x, y). Level pairs (H1 <= H2)
// ascending, then candidate order; none found is not a proof of primality.
std::optional<PrimalityWitness> refute_primality_serial(const TambaraIdeal& I, const RefuteOptions& opt = {});
// same result as the serial search, computed with OpenMP
std::optional<PrimalityWitness> refute_primality_parallel(const TambaraIdeal& I, const RefuteOptions& opt = {});
std::optional<PrimalityWitness> refute_primality(const TambaraIdeal& I, const RefuteOptions& opt = {});

} // namespace tambara
