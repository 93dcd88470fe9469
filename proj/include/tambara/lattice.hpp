#pragma once

#include <string>
#include <vector>

namespace tambara {

bool is_prime(long n);
std::vector<long> prime_factors(long n);
// the k smallest primes not in `avoid`
std::vector<long> small_primes_avoiding(const std::vector<long>& avoid, size_t k);

// Subgroups of C_n, each named by its order.
struct SubgroupLattice {
    int n = 1;
    std::vector<int> subgroups;

    bool is_subgroup(int d) const;
    bool contains(int K, int H) const; // K <= H
    int intersect(int K, int H) const;
    int join(int K, int H) const;
    int weyl_order(int d) const;
    size_t index_of(int d) const;
    void require(int d) const;

    bool operator==(const SubgroupLattice& o) const { return n == o.n; }
};

SubgroupLattice cyclic_lattice(int n);
int intersect(const SubgroupLattice& lat, int K, int H);

// "C_4" style label
std::string subgroup_label(int d);

} // namespace tambara
