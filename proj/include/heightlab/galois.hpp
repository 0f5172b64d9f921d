#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heightlab/exactpoly.hpp"
#include "heightlab/perm.hpp"

namespace heightlab {

// Fully enumerated permutation group on n <= 7 points (order <= 5040).
class GroupTable {
public:
    GroupTable() = default;
    GroupTable(int n, std::vector<Perm> elements, std::vector<Perm> generators);

    int points() const { return n_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }
    bool contains(const Perm& p) const;
    int index_of(const Perm& p) const;  // -1 when absent
    bool is_subgroup_of(const GroupTable& g) const;

private:
    int n_ = 0;
    std::vector<Perm> elements_;  // sorted
    std::vector<Perm> generators_;
};

GroupTable generate(const std::vector<Perm>& gens);

GroupTable centralizer(const GroupTable& g, const Perm& x);

// Number of left cosets sH with c*sH = sH, i.e. s^-1 c s in H.
int fixed_cosets(const GroupTable& g, const GroupTable& h, const Perm& c);

// Brute force over normal closures of single elements. The trivial group
// is not considered simple.
bool is_simple(const GroupTable& g);

GroupTable normal_closure(const GroupTable& g, const Perm& x);

// All normal subgroups, enumerated as unions of conjugacy classes.
std::vector<GroupTable> normal_subgroups(const GroupTable& g);

std::vector<std::vector<Perm>> conjugacy_classes(const GroupTable& g);

struct QuinticEvidence {
    std::optional<std::uint64_t> irreducible_prime;
    std::vector<std::pair<std::uint64_t, DegreePattern>> patterns;
};

struct QuinticVerdict {
    bool provably_s5 = false;
    std::optional<std::uint64_t> irreducible_prime;
    std::optional<std::uint64_t> transposition_prime;
    std::string detail;
};

// A transitive subgroup of S_5 containing a transposition is S_5:
// transitivity from an irreducibility witness, a transposition from a
// {1,1,1,2} pattern or the cube of a {2,3} element. Never claims a
// smaller group; Inconclusive (provably_s5 = false) is a valid outcome.
QuinticVerdict classify_quintic_galois(const QuinticEvidence& evidence);

// Scans good primes <= budget and collects the evidence for f (degree 5).
QuinticEvidence gather_quintic_evidence(const IntPoly& f,
                                        std::uint64_t prime_budget = kDefaultPrimeBudget);

}  // namespace heightlab
