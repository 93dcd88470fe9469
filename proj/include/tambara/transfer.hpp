#pragma once

#include "tambara/lattice.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tambara {

using Edge = std::pair<int, int>; // (K, H) with K <= H

class TransferSystem {
public:
    TransferSystem() = default;
    // pairs must already form a transfer system; reflexive pairs are added
    TransferSystem(SubgroupLattice lat, const std::set<Edge>& pairs);

    const SubgroupLattice& lattice() const { return lat_; }
    const std::set<Edge>& pairs() const { return pairs_; }
    std::vector<Edge> nontrivial_pairs() const;
    bool contains(int K, int H) const { return pairs_.count({K, H}) > 0; }
    bool subset_of(const TransferSystem& o) const;
    std::string str() const;

    bool operator==(const TransferSystem& o) const { return lat_ == o.lat_ && pairs_ == o.pairs_; }
    bool operator<(const TransferSystem& o) const { return pairs_ < o.pairs_; }

private:
    SubgroupLattice lat_;
    std::set<Edge> pairs_;
};

struct AxiomViolation {
    std::string axiom; // "divisibility", "transitivity", "restriction"
    std::vector<Edge> witness;
    std::string message;
};

std::optional<AxiomViolation> validate_transfer_system(const SubgroupLattice& lat, const std::set<Edge>& pairs);
TransferSystem make_transfer_system(const SubgroupLattice& lat, const std::set<Edge>& pairs);
// least transfer system containing the given pairs
TransferSystem generate_transfer_system(const SubgroupLattice& lat, const std::set<Edge>& pairs);
TransferSystem trivial_system(const SubgroupLattice& lat);
TransferSystem complete_system(const SubgroupLattice& lat);

// non-reflexive K|H pairs in lexicographic order; bit i of a mask is pair i
std::vector<Edge> candidate_edges(const SubgroupLattice& lat);
std::vector<TransferSystem> enumerate_transfer_systems(const SubgroupLattice& lat);

bool is_saturated(const TransferSystem& ts);
TransferSystem saturated_hull(const TransferSystem& ts);

struct CompatiblePair {
    TransferSystem mult;
    TransferSystem add;
    bool operator==(const CompatiblePair& o) const { return mult == o.mult && add == o.add; }
};

struct CompatibilityViolation {
    int B, C, A;
};

std::optional<CompatibilityViolation> check_compatible_pair(const TransferSystem& Om, const TransferSystem& Oa);
bool is_compatible_pair(const TransferSystem& Om, const TransferSystem& Oa);
CompatiblePair make_compatible_pair(const TransferSystem& Om, const TransferSystem& Oa);
std::vector<CompatiblePair> enumerate_compatible_pairs(const SubgroupLattice& lat);

struct PathComponent {
    int minimum;
    std::vector<int> members; // ascending
};

std::vector<PathComponent> path_components(const TransferSystem& ts);

// Names Otriv, O1, O2, O3, Ocomp on C_{p^2}; Otriv and Ocomp on any group.
std::optional<std::string> system_name(const TransferSystem& ts);
// Accepts a name or a raw list such as "1:2/1:3" or "(1,2),(1,3)".
TransferSystem parse_system(const SubgroupLattice& lat, const std::string& text);
std::string pair_name(const CompatiblePair& pr);

} // namespace tambara
