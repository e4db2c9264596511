#include "acsl/manifolds.hpp"

#include <string>

#include "acsl/errors.hpp"

namespace acsl {

namespace {

void require_observed_only(const FramedLink& observed) {
  validate(observed);
  if (observed.surgery_count() != 0) {
    throw Error(ErrorKind::invalid_argument, "reference presentations take an all-observed link");
  }
}

}  // namespace

Invariant s1xsigma_expectation(const HomologyData& h, const CouplingLevel& k) {
  if (h.genus < 0) throw Error(ErrorKind::invalid_argument, "genus must be non-negative");
  const auto expected = static_cast<std::size_t>(2 * h.genus + 1);
  if (h.intersections.size() != expected) {
    throw Error(ErrorKind::invalid_argument,
                "genus " + std::to_string(h.genus) + " needs " + std::to_string(expected) +
                    " intersection numbers, got " + std::to_string(h.intersections.size()));
  }
  for (std::int64_t n : h.intersections) {
    if (n % k.colour_modulus() != 0) return Invariant::from_value(CycNum::zero(k.root_order()));
  }
  const std::int64_t order = k.root_order();
  return Invariant::from_phase(PhaseExponent::from_form_residue(h.self_linking % order, k));
}

Invariant s1xs2_expectation(const HomologyData& h, const CouplingLevel& k) {
  if (h.genus != 0) {
    throw Error(ErrorKind::invalid_argument,
                "S^1 x S^2 expects genus 0, got " + std::to_string(h.genus));
  }
  return s1xsigma_expectation(h, k);
}

SurgeryPresentation s1xs2_presentation(const FramedLink& observed,
                                       const std::vector<std::int64_t>& core_linkings,
                                       const CouplingLevel& k) {
  require_observed_only(observed);
  if (core_linkings.size() != observed.size()) {
    throw Error(ErrorKind::invalid_argument, "core_linkings needs one entry per observed component");
  }
  SurgeryPresentation p{observed, k};
  append_component(p.link, core_linkings, 0, 0, Role::surgery, "core");
  return p;
}

SurgeryPresentation t3_presentation(const FramedLink& observed,
                                    const std::vector<std::array<std::int64_t, 3>>& linkings,
                                    const CouplingLevel& k) {
  require_observed_only(observed);
  if (linkings.size() != observed.size()) {
    throw Error(ErrorKind::invalid_argument, "linkings needs one row per observed component");
  }
  SurgeryPresentation p{observed, k};
  for (std::size_t ring = 0; ring < 3; ++ring) {
    std::vector<std::int64_t> row;
    for (const auto& l : linkings) row.push_back(l[ring]);
    // Borromean rings: pairwise linking zero.
    row.resize(p.link.size(), 0);
    append_component(p.link, row, 0, 0, Role::surgery, "ring" + std::to_string(ring + 1));
  }
  return p;
}

HomologyData s1xs2_homology(const FramedLink& observed,
                            const std::vector<std::int64_t>& core_linkings) {
  if (core_linkings.size() != observed.size()) {
    throw Error(ErrorKind::invalid_argument, "core_linkings needs one entry per observed component");
  }
  std::int64_t n0 = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) n0 += observed.charges[i] * core_linkings[i];
  return HomologyData{0, {n0}, quadratic_form(observed, RoleFilter::observed)};
}

HomologyData t3_homology(const FramedLink& observed,
                         const std::vector<std::array<std::int64_t, 3>>& linkings) {
  if (linkings.size() != observed.size()) {
    throw Error(ErrorKind::invalid_argument, "linkings needs one row per observed component");
  }
  HomologyData h{1, {0, 0, 0}, quadratic_form(observed, RoleFilter::observed)};
  for (std::size_t i = 0; i < observed.size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) h.intersections[j] += observed.charges[i] * linkings[i][j];
  }
  return h;
}

}  // namespace acsl
