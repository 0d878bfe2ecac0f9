#ifndef BIFRAME_LATTICE_HPP
#define BIFRAME_LATTICE_HPP

#include <array>
#include <optional>
#include <vector>

#include "biframe/poset.hpp"

namespace biframe {

/// Meet/join tables of a finite lattice, indexed by poset element.
struct LatticeTables {
  int n = 0;
  std::vector<int> meet;  // n*n, row-major
  std::vector<int> join;
  int bottom = -1;
  int top = -1;

  int m(int x, int y) const { return meet[x * n + y]; }
  int j(int x, int y) const { return join[x * n + y]; }
};

/// Computes meet/join tables; throws NotALattice naming an offending pair.
LatticeTables lattice_tables(const FinPoset& p);

/// Indices of the join-irreducible elements (nonbottom, unique lower cover).
std::vector<int> join_irreducible_elements(const FinPoset& p, const LatticeTables& t);

/// The sub-poset of join-irreducibles.
FinPoset join_irreducibles(const FinPoset& p, const LatticeTables& t);

/// Lattice of down-closed subsets of q ordered by inclusion. Elements are
/// ordered by (size, mask) and labelled "{a,b,...}" from q's labels.
/// Throws SizeLimitExceeded when |q| > max_ground or more than 64 downsets.
FinPoset downset_lattice(const FinPoset& q, int max_ground = 20);

/// Masks of all down-closed subsets of q, sorted by (popcount, value).
std::vector<std::uint64_t> downset_masks(const FinPoset& q, int max_ground = 20);

/// Distributivity decided by the exhaustive triple identity
/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z).
bool is_distributive(const FinPoset& p, const LatticeTables& t);

/// Witness sublattice isomorphic to N5: {bottom, x, z, y, top} with
/// x < z both incomparable to y. Returns indices in that order, or nullopt.
std::optional<std::array<int, 5>> find_pentagon(const FinPoset& p, const LatticeTables& t);

/// Witness sublattice isomorphic to M3: {bottom, x, y, z, top}.
std::optional<std::array<int, 5>> find_diamond_m3(const FinPoset& p, const LatticeTables& t);

/// Lattice isomorphism by backtracking on the order; returns the element map
/// dom -> cod or nullopt. Intended for the small lattices handled here.
std::optional<std::vector<int>> lattice_isomorphism(const FinPoset& a, const LatticeTables& ta,
                                                    const FinPoset& b, const LatticeTables& tb);

bool lattices_isomorphic(const FinPoset& a, const LatticeTables& ta,
                         const FinPoset& b, const LatticeTables& tb);

}  // namespace biframe

#endif
