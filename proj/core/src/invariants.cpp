#include "acsl/invariants.hpp"

#include <string>

#include "acsl/errors.hpp"

namespace acsl {

namespace {

bool selected(const FramedLink& link, std::size_t j, RoleFilter filter) {
  switch (filter) {
    case RoleFilter::observed: return link.roles[j] == Role::observed;
    case RoleFilter::surgery: return link.roles[j] == Role::surgery;
    case RoleFilter::all: return true;
  }
  return false;
}

std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

void require_index(const FramedLink& link, std::size_t j) {
  if (j >= link.size()) {
    throw Error(ErrorKind::index, "component index " + std::to_string(j) + " out of range (" +
                                      std::to_string(link.size()) + " components)");
  }
}

}  // namespace

CouplingLevel::CouplingLevel(std::int64_t k) : k_(k) {
  if (k == 0) throw Error(ErrorKind::invalid_argument, "coupling level k must be nonzero");
  if (k > (std::int64_t{1} << 28) || k < -(std::int64_t{1} << 28)) {
    throw Error(ErrorKind::invalid_argument, "coupling level |k| too large");
  }
}

PhaseExponent PhaseExponent::from_form_residue(std::int64_t form_residue, const CouplingLevel& k) {
  const int order = k.root_order();
  return PhaseExponent{floor_mod(-k.sign() * floor_mod(form_residue, order), order), order};
}

Invariant Invariant::from_value(CycNum value) {
  Invariant out{std::move(value), false, {}, std::nullopt};
  out.is_zero = out.value.is_zero();
  out.numeric = embed_numeric(out.value);
  if (auto e = root_of_unity_exponent(out.value)) out.phase = PhaseExponent{*e, out.value.order()};
  return out;
}

Invariant Invariant::from_phase(const PhaseExponent& phase) {
  Invariant out{root_power(phase.order, phase.exponent), false, {}, phase};
  out.numeric = embed_numeric(out.value);
  return out;
}

std::int64_t quadratic_form(const FramedLink& link, RoleFilter filter) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < link.size(); ++i) {
    if (!selected(link, i, filter) || link.charges[i] == 0) continue;
    for (std::size_t j = 0; j < link.size(); ++j) {
      if (!selected(link, j, filter) || link.charges[j] == 0) continue;
      std::int64_t term = 0;
      if (__builtin_mul_overflow(link.charges[i], link.linking(i, j), &term) ||
          __builtin_mul_overflow(term, link.charges[j], &term) ||
          __builtin_add_overflow(total, term, &total)) {
        throw Error(ErrorKind::invalid_argument, "quadratic form overflows 64 bits");
      }
    }
  }
  return total;
}

std::int64_t quadratic_form_residue(const FramedLink& link, RoleFilter filter,
                                    std::int64_t modulus) {
  if (modulus <= 0) throw Error(ErrorKind::invalid_argument, "modulus must be positive");
  if (modulus > (std::int64_t{1} << 31)) {
    throw Error(ErrorKind::invalid_argument, "modulus must be below 2^31");
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < link.size(); ++i) {
    if (!selected(link, i, filter)) continue;
    const std::int64_t qi = floor_mod(link.charges[i], modulus);
    if (qi == 0) continue;
    for (std::size_t j = 0; j < link.size(); ++j) {
      if (!selected(link, j, filter)) continue;
      const std::int64_t qj = floor_mod(link.charges[j], modulus);
      const std::int64_t lij = floor_mod(link.linking(i, j), modulus);
      total = (total + qi * lij % modulus * qj) % modulus;
    }
  }
  return total;
}

Invariant s3_expectation(const FramedLink& link, const CouplingLevel& k) {
  validate(link);
  if (link.surgery_count() != 0) {
    throw Error(ErrorKind::invalid_argument,
                "s3_expectation: link has surgery components; use surgery_expectation");
  }
  const std::int64_t q = quadratic_form_residue(link, RoleFilter::observed, k.root_order());
  return Invariant::from_phase(PhaseExponent::from_form_residue(q, k));
}

FramedLink reduce_colours(const FramedLink& link, const CouplingLevel& k) {
  FramedLink out = link;
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (out.roles[j] == Role::observed) out.charges[j] = floor_mod(out.charges[j], k.colour_modulus());
  }
  return out;
}

FramedLink reverse_component(const FramedLink& link, std::size_t j) {
  require_index(link, j);
  FramedLink out = link;
  out.charges[j] = -out.charges[j];
  return out;
}

FramedLink drop_uncoloured(const FramedLink& link) {
  FramedLink out = link;
  for (std::size_t j = out.size(); j-- > 0;) {
    if (out.roles[j] == Role::observed && out.charges[j] == 0) out = remove_component(out, j);
  }
  return out;
}

FramedLink satellite_expand(const FramedLink& link, std::size_t j, int sign) {
  require_index(link, j);
  if (link.roles[j] != Role::observed) {
    throw Error(ErrorKind::invalid_argument, "satellite_expand: component " + link.names[j] +
                                                 " is a surgery component");
  }
  if (sign != 1 && sign != -1) {
    throw Error(ErrorKind::invalid_argument, "satellite_expand: sign must be +1 or -1");
  }
  const std::size_t n = link.size();
  // New index -> parent index; positions j and j+1 both descend from j.
  std::vector<std::size_t> parent;
  for (std::size_t i = 0; i < n; ++i) {
    parent.push_back(i);
    if (i == j) parent.push_back(i);
  }
  FramedLink out;
  out.linking = IntMatrix(n + 1);
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; b <= n; ++b) out.linking(a, b) = link.linking(parent[a], parent[b]);
    out.charges.push_back(link.charges[parent[a]]);
    out.roles.push_back(link.roles[parent[a]]);
    out.names.push_back(link.names[parent[a]]);
  }
  out.charges[j] = link.charges[j] + sign;
  out.charges[j + 1] = -sign;
  out.names[j] += ".1";
  out.names[j + 1] += ".2";
  return out;
}

FramedLink simplicial_satellite(const FramedLink& link) {
  FramedLink out = drop_uncoloured(link);
  for (std::size_t j = 0; j < out.size();) {
    const std::int64_t q = out.charges[j];
    if (out.roles[j] == Role::observed && (q > 1 || q < -1)) {
      // q -> (q -/+ 1, +/-1); the reduced component stays at j.
      out = satellite_expand(out, j, q > 1 ? -1 : +1);
    } else {
      ++j;
    }
  }
  return out;
}

FramedLink simplicial_satellite(const FramedLink& link, const CouplingLevel& k) {
  return simplicial_satellite(reduce_colours(link, k));
}

}  // namespace acsl
