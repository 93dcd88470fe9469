#include "tambara/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tambara {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<long> small_primes_avoiding(const std::vector<long>& avoid, size_t k) {
    std::vector<long> out;
    for (long c = 2; out.size() < k; ++c)
        if (is_prime(c) && std::find(avoid.begin(), avoid.end(), c) == avoid.end()) out.push_back(c);
    return out;
}

SubgroupLattice cyclic_lattice(int n) {
    if (n <= 0) throw std::invalid_argument("group order must be positive");
    SubgroupLattice lat;
    lat.n = n;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) lat.subgroups.push_back(d);
    return lat;
}

bool SubgroupLattice::is_subgroup(int d) const { return d > 0 && n % d == 0; }

void SubgroupLattice::require(int d) const {
    if (!is_subgroup(d))
        throw std::invalid_argument(std::to_string(d) + " is not a subgroup order of C_" + std::to_string(n));
}

bool SubgroupLattice::contains(int K, int H) const {
    require(K);
    require(H);
    return H % K == 0;
}

int SubgroupLattice::intersect(int K, int H) const {
    require(K);
    require(H);
    return std::gcd(K, H);
}

int SubgroupLattice::join(int K, int H) const {
    require(K);
    require(H);
    return std::lcm(K, H);
}

int SubgroupLattice::weyl_order(int d) const {
    require(d);
    return n / d;
}

size_t SubgroupLattice::index_of(int d) const {
    auto it = std::find(subgroups.begin(), subgroups.end(), d);
    if (it == subgroups.end()) require(d);
    return static_cast<size_t>(it - subgroups.begin());
}

int intersect(const SubgroupLattice& lat, int K, int H) { return lat.intersect(K, H); }

std::string subgroup_label(int d) { return d == 1 ? "e" : "C_" + std::to_string(d); }

} // namespace tambara
