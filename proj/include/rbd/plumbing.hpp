#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbd/hj.hpp"
#include "rbd/symmatrix.hpp"

namespace rbd {

struct PlumbingVertex {
  std::string id;
  // Self-intersection (Euler number) of the disk bundle.
  std::int64_t weight = 0;
  std::int64_t genus = 0;

  friend bool operator==(const PlumbingVertex&, const PlumbingVertex&) = default;
};

// Weighted plumbing graph. Ids are unique and alphanumeric; edges form a
// multiset of unordered pairs without self-loops.
class PlumbingGraph {
public:
  // Throws DuplicateId, or BadWeight for a negative genus.
  std::size_t add_vertex(std::string id, std::int64_t weight, std::int64_t genus = 0);
  // Throws UnknownId, or InvalidArgument for a self-loop.
  void add_edge(std::string_view a, std::string_view b);

  // Path whose weights are the negated terms of s; ids v1, ..., vk.
  static PlumbingGraph chain(const HJString& s);

  const std::vector<PlumbingVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  std::optional<std::size_t> index_of(std::string_view id) const;
  std::size_t edge_count(std::size_t i, std::size_t j) const;
  // Neighbours with multiplicity.
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }

private:
  std::vector<PlumbingVertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Line-oriented DSL:
//   vertex <id> <weight> <genus>
//   edge <id> <id>
//   chain <w1> <w2> ...      (path with generated ids c<N>v<k>)
// '#' starts a comment. Throws SyntaxError (with line/column), DuplicateId,
// UnknownId or BadWeight.
PlumbingGraph parse_plumbing(std::string_view text);

// Canonical text: all vertex lines, then all edge lines.
std::string print_plumbing(const PlumbingGraph& g);

// Equality of vertex data and edge multisets, ignoring declaration order.
bool same_structure(const PlumbingGraph& a, const PlumbingGraph& b);

SymMatrix intersection_matrix(const PlumbingGraph& g);
bool is_negative_definite(const PlumbingGraph& g);

// The chain read from its lower-index endpoint. Throws NotLinearChain,
// NotAllRational or WeightOutOfRange.
HJString chain_string(const PlumbingGraph& g);
LensSpace boundary_lens(const PlumbingGraph& g);

struct ConfigurationMatch {
  std::int64_t p = 0;
  std::int64_t q = 0;
  // Listed so that vertex k carries weight -cpq_string(p, q)[k].
  std::vector<std::string> vertex_ids;

  friend bool operator==(const ConfigurationMatch&, const ConfigurationMatch&) = default;
};

// Induced sphere chains equal to C_{p,q} read in either direction, whose
// interior vertices have no edges besides the chain's own. Matches are
// counted once up to reversal. Throws InvalidPQ.
std::vector<ConfigurationMatch> find_cpq(const PlumbingGraph& g, std::int64_t p, std::int64_t q);

// Every C_{p,q} configuration in g, over all (p, q).
std::vector<ConfigurationMatch> find_all_cpq(const PlumbingGraph& g);

}  // namespace rbd
