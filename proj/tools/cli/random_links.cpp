#include "cli/random_links.hpp"

#include <algorithm>
#include <vector>

namespace acsl::cli {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

FramedLink random_link(Rng& rng, std::size_t components, std::int64_t entry_bound,
                       std::int64_t charge_bound) {
  IntMatrix m(components);
  for (std::size_t i = 0; i < components; ++i) {
    for (std::size_t j = i; j < components; ++j) {
      m(i, j) = uniform(rng, -entry_bound, entry_bound);
      m(j, i) = m(i, j);
    }
  }
  std::vector<std::int64_t> charges(components);
  for (auto& q : charges) q = uniform(rng, -charge_bound, charge_bound);
  return make_link(std::move(m), std::move(charges));
}

SurgeryPresentation random_presentation(Rng& rng, std::size_t surgery, std::size_t observed,
                                        std::int64_t entry_bound, std::int64_t charge_bound,
                                        const CouplingLevel& k) {
  FramedLink link = random_link(rng, surgery + observed, entry_bound, charge_bound);
  std::vector<Role> roles(observed, Role::observed);
  roles.resize(surgery + observed, Role::surgery);
  std::shuffle(roles.begin(), roles.end(), rng);
  link.roles = roles;
  for (std::size_t j = 0; j < link.size(); ++j) {
    link.names[j] = default_name(roles[j], j);
    if (roles[j] == Role::surgery) link.charges[j] = 0;
  }
  return SurgeryPresentation{std::move(link), k};
}

std::string KirbyMove::describe() const {
  switch (kind) {
    case Kind::blow_up: return "blow_up(" + std::to_string(sign) + ")";
    case Kind::blow_down: return "blow_down(" + std::to_string(j) + ")";
    case Kind::handle_slide:
      return "handle_slide(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(sign) + ")";
  }
  return "?";
}

std::optional<KirbyMove> random_kirby_move(Rng& rng, const SurgeryPresentation& p,
                                           std::size_t max_surgery) {
  const FramedLink& link = p.link;
  std::vector<std::size_t> surgery;
  std::vector<std::size_t> removable;
  for (std::size_t j = 0; j < link.size(); ++j) {
    if (link.roles[j] != Role::surgery) continue;
    surgery.push_back(j);
    const bool unit = link.linking(j, j) == 1 || link.linking(j, j) == -1;
    bool isolated = true;
    for (std::size_t i = 0; i < link.size(); ++i) isolated = isolated && (i == j || link.linking(i, j) == 0);
    if (unit && isolated) removable.push_back(j);
  }

  std::vector<KirbyMove::Kind> kinds;
  if (surgery.size() < max_surgery) kinds.push_back(KirbyMove::Kind::blow_up);
  if (!removable.empty()) kinds.push_back(KirbyMove::Kind::blow_down);
  if (!surgery.empty() && link.size() >= 2) kinds.push_back(KirbyMove::Kind::handle_slide);
  if (kinds.empty()) return std::nullopt;

  auto pick = [&](const std::vector<std::size_t>& from) {
    return from[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(from.size()) - 1))];
  };
  KirbyMove move{kinds[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(kinds.size()) - 1))]};
  move.sign = uniform(rng, 0, 1) == 0 ? -1 : 1;
  switch (move.kind) {
    case KirbyMove::Kind::blow_up: break;
    case KirbyMove::Kind::blow_down: move.j = pick(removable); break;
    case KirbyMove::Kind::handle_slide: {
      move.j = pick(surgery);
      do {
        move.i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(link.size()) - 1));
      } while (move.i == move.j);
      break;
    }
  }
  return move;
}

SurgeryPresentation apply(const SurgeryPresentation& p, const KirbyMove& move) {
  switch (move.kind) {
    case KirbyMove::Kind::blow_up: return blow_up(p, move.sign);
    case KirbyMove::Kind::blow_down: return blow_down(p, move.j);
    case KirbyMove::Kind::handle_slide: return handle_slide(p, move.i, move.j, move.sign);
  }
  return p;
}

}  // namespace acsl::cli
