#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "acsl/framed_link.hpp"
#include "acsl/invariants.hpp"
#include "acsl/surgery.hpp"

namespace acsl {

/// Homology data of a link in S^1 x Sigma_g: the 2g+1 weighted intersection
/// numbers N_j with the surface generators and the framed self-linking form.
struct HomologyData {
  int genus = 0;
  std::vector<std::int64_t> intersections;
  std::int64_t self_linking = 0;

  friend bool operator==(const HomologyData&, const HomologyData&) = default;
};

/// S^1 x S^2: zero unless N_0 = 0 mod 2|k|, otherwise
/// zeta_{4|k|}^{-sgn(k) self_linking}. Requires genus 0.
Invariant s1xs2_expectation(const HomologyData& h, const CouplingLevel& k);

/// S^1 x Sigma_g: zero unless every N_j = 0 mod 2|k|.
Invariant s1xsigma_expectation(const HomologyData& h, const CouplingLevel& k);

/// Observed link plus a 0-framed surgery unknot linking observed component i
/// core_linkings[i] times.
SurgeryPresentation s1xs2_presentation(const FramedLink& observed,
                                       const std::vector<std::int64_t>& core_linkings,
                                       const CouplingLevel& k);

/// Observed link plus 0-framed Borromean rings (zero linking matrix);
/// linkings[i][j] is lk(observed i, surgery ring j).
SurgeryPresentation t3_presentation(const FramedLink& observed,
                                    const std::vector<std::array<std::int64_t, 3>>& linkings,
                                    const CouplingLevel& k);

/// Homology data matching s1xs2_presentation: N_0 = sum q_i core_i and the
/// observed-block quadratic form.
HomologyData s1xs2_homology(const FramedLink& observed,
                            const std::vector<std::int64_t>& core_linkings);

/// Homology data matching t3_presentation (genus 1).
HomologyData t3_homology(const FramedLink& observed,
                         const std::vector<std::array<std::int64_t, 3>>& linkings);

}  // namespace acsl
