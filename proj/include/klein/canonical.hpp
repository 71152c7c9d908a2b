#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klein/graph.hpp"

namespace klein {

/// Canonical code of an isomorphism class in a given variant. Byte strings
/// compare lexicographically; equal codes mean isomorphic graphs.
struct CanonicalCode {
  GraphVariant variant = GraphVariant::ribbon;
  std::string bytes;

  bool operator==(const CanonicalCode& o) const { return variant == o.variant && bytes == o.bytes; }
  bool operator<(const CanonicalCode& o) const {
    return variant != o.variant ? variant < o.variant : bytes < o.bytes;
  }
  std::string hex() const;
  std::uint64_t hash() const;  // FNV-1a, stable across platforms
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const { return static_cast<std::size_t>(c.hash()); }
};

/// Code plus every labelling that realises it. labelings[i][h] is the index
/// of half-edge h in decode(code); composing two of them gives an automorphism.
struct CanonicalForm {
  CanonicalCode code;
  std::vector<std::vector<int>> labelings;
};

/// `all_leaves=false` stops collecting labelings after the first one, which is
/// enough for deduplication and isomorphism transport.
CanonicalForm canonical_form(const HalfEdgeGraph& g, GraphVariant variant, bool all_leaves = true);
CanonicalCode canonical_code(const HalfEdgeGraph& g, GraphVariant variant);

/// The canonical representative: half-edge i is the half-edge with canonical
/// index i. Untwisted edges get colours (0,0), twisted ones (0,1) on the
/// (lower, higher) index; colours are zero wherever the variant forgets them.
HalfEdgeGraph decode(const CanonicalCode& code);

bool isomorphic(const HalfEdgeGraph& a, const HalfEdgeGraph& b, GraphVariant variant);

struct AutomorphismReport {
  std::uint64_t group_order = 1;
  bool orientation_reversing_exists = false;
  /// Non-identity automorphisms as half-edge permutations (the full group
  /// minus the identity, which in particular generates it).
  std::vector<std::vector<int>> generators;
  std::vector<int> signs;  // sign of each generator on det(edges) (x) det(H1)

  bool operator==(const AutomorphismReport&) const = default;
};

/// Forgetting colours is the quotient by a = 1 where the involution acts as
/// -a, so reversing the cyclic order at a vertex of valence k multiplies a
/// dianalytic basis graph by (-1)^k.
int reversal_sign(int valence);

/// Product of reversal_sign over the vertices whose cyclic order the
/// isomorphism `map` reverses.
int dianalytic_transport_sign(const HalfEdgeGraph& src, const std::vector<int>& map, const HalfEdgeGraph& dst);

AutomorphismReport automorphism_signs(const HalfEdgeGraph& g, GraphVariant variant);

}  // namespace klein
