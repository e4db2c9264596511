#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "acsl/framed_link.hpp"
#include "acsl/invariants.hpp"
#include "acsl/surgery.hpp"

namespace acsl::cli {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// All-observed link with symmetric entries in [-entry_bound, entry_bound]
/// and charges in [-charge_bound, charge_bound].
FramedLink random_link(Rng& rng, std::size_t components, std::int64_t entry_bound,
                       std::int64_t charge_bound);

/// Random presentation with `surgery` surgery and `observed` observed
/// components in shuffled order.
SurgeryPresentation random_presentation(Rng& rng, std::size_t surgery, std::size_t observed,
                                        std::int64_t entry_bound, std::int64_t charge_bound,
                                        const CouplingLevel& k);

struct KirbyMove {
  enum class Kind { blow_up, blow_down, handle_slide };
  Kind kind;
  std::size_t i = 0;  // slid component
  std::size_t j = 0;  // surgery component (blow_down / slide target)
  int sign = 1;

  std::string describe() const;
};

/// Uniform over the move kinds currently applicable; blow-ups are only
/// offered while the presentation has fewer than max_surgery surgery
/// components.
std::optional<KirbyMove> random_kirby_move(Rng& rng, const SurgeryPresentation& p,
                                           std::size_t max_surgery);

SurgeryPresentation apply(const SurgeryPresentation& p, const KirbyMove& move);

}  // namespace acsl::cli
