#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "acsl/framed_link.hpp"

namespace acsl {

/// One PD crossing X(a,b,c,d). The under-strand enters along edge a and
/// leaves along edge c; b, c, d follow a counterclockwise. The crossing is
/// positive exactly when the over-strand runs from d to b.
struct Crossing {
  std::array<int, 4> edges{};

  int a() const { return edges[0]; }
  int b() const { return edges[1]; }
  int c() const { return edges[2]; }
  int d() const { return edges[3]; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Validated oriented planar diagram.
///
/// Construction resolves the direction of every over-strand from the
/// component edge orders and caches each crossing's sign and the components
/// of its two strands.
///
/// A two-edge component that only ever passes over has no orientation
/// recorded in the crossings themselves; the first crossing (in input order)
/// touching it is taken to carry the transition components[j][0] ->
/// components[j][1].
class Diagram {
 public:
  Diagram(std::vector<Crossing> crossings, std::vector<std::vector<int>> components);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<std::vector<int>>& components() const noexcept { return components_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t component_count() const noexcept { return components_.size(); }

  int sign(std::size_t crossing) const;
  std::size_t under_component(std::size_t crossing) const;
  std::size_t over_component(std::size_t crossing) const;

  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.crossings_ == y.crossings_ && x.components_ == y.components_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::vector<int>> components_;
  std::vector<int> signs_;
  std::vector<std::size_t> under_;
  std::vector<std::size_t> over_;
};

/// Parses whitespace-separated X(a,b,c,d) terms (X[...] and separating
/// commas are also accepted).
std::vector<Crossing> parse_crossings(std::string_view text);

/// Parses crossing terms followed by a component block `C: 1 2 3 4; 5 6`.
Diagram parse_pd(std::string_view text);

/// Inverse of parse_pd.
std::string to_pd_text(const Diagram& diagram);

int crossing_sign(const Diagram& diagram, std::size_t crossing_index);

struct Blackboard {};
using FramingSpec = std::variant<std::vector<std::int64_t>, Blackboard>;

/// Off-diagonal entries are half the signed count of crossings between two
/// components; the diagonal is the explicit framing or, for Blackboard, the
/// writhe of the component.
FramedLink linking_matrix(const Diagram& diagram, const FramingSpec& framings);

/// Reflects the diagram in the projection plane (b <-> d in every crossing).
Diagram mirror(const Diagram& diagram);

/// Reverses the orientation of component j.
Diagram reverse_component(const Diagram& diagram, std::size_t j);

/// Closure of a braid word on `strands` strands. Generator +i crosses strand
/// position i over position i+1 (1-based, positive crossing); -i is its
/// inverse.
Diagram braid_closure(int strands, std::span<const int> word);

}  // namespace acsl
