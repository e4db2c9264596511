#include "acsl/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "acsl/errors.hpp"

namespace acsl {

namespace {

std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

std::vector<std::size_t> surgery_indices(const FramedLink& link) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < link.size(); ++j) {
    if (link.roles[j] == Role::surgery) out.push_back(j);
  }
  return out;
}

// Histogram of q^T L q mod `modulus` over the colour vectors whose last
// surgery colour is congruent to `worker` mod `workers`. Walks the remaining
// colours in reflected mixed-radix Gray order so each step changes one colour
// by +-1 and updates L q and the form incrementally.
std::vector<std::uint64_t> histogram_slice(const IntMatrix& lmod, const std::vector<std::int64_t>& base,
                                           const std::vector<std::size_t>& surgery,
                                           std::int64_t radix, std::int64_t modulus,
                                           unsigned worker, unsigned workers) {
  const std::size_t n = base.size();
  std::vector<std::uint64_t> histogram(static_cast<std::size_t>(modulus), 0);

  if (surgery.empty()) {
    if (worker != 0) return histogram;
    std::int64_t form = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) form = (form + base[i] * lmod(i, j) % modulus * base[j]) % modulus;
    }
    ++histogram[static_cast<std::size_t>(form)];
    return histogram;
  }

  const std::size_t top = surgery.back();
  const std::size_t inner = surgery.size() - 1;
  std::vector<std::int64_t> v(n);
  std::vector<std::int64_t> w(n);
  std::vector<std::int64_t> digit(inner);
  std::vector<int> direction(inner);

  for (std::int64_t t = worker; t < radix; t += workers) {
    v = base;
    v[top] = t;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc = (acc + lmod(i, j) * v[j]) % modulus;
      w[i] = acc;
    }
    std::int64_t form = 0;
    for (std::size_t i = 0; i < n; ++i) form = (form + v[i] * w[i]) % modulus;
    std::fill(digit.begin(), digit.end(), 0);
    std::fill(direction.begin(), direction.end(), 1);

    ++histogram[static_cast<std::size_t>(form)];
    for (;;) {
      std::size_t d = 0;
      while (d < inner) {
        const std::int64_t next = digit[d] + direction[d];
        if (next >= 0 && next < radix) break;
        direction[d] = -direction[d];
        ++d;
      }
      if (d == inner) break;
      const int step = direction[d];
      digit[d] += step;
      const std::size_t idx = surgery[d];
      form = floor_mod(form + 2 * step * w[idx] + lmod(idx, idx), modulus);
      for (std::size_t m = 0; m < n; ++m) w[m] = floor_mod(w[m] + step * lmod(m, idx), modulus);
      ++histogram[static_cast<std::size_t>(form)];
    }
  }
  return histogram;
}

std::string unused_surgery_name(const FramedLink& link) {
  for (std::size_t i = link.size();; ++i) {
    std::string candidate = default_name(Role::surgery, i);
    if (std::find(link.names.begin(), link.names.end(), candidate) == link.names.end()) return candidate;
  }
}

void require_index(const FramedLink& link, std::size_t j) {
  if (j >= link.size()) {
    throw Error(ErrorKind::index, "component index " + std::to_string(j) + " out of range (" +
                                      std::to_string(link.size()) + " components)");
  }
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) {
    throw Error(ErrorKind::invalid_argument, "linking entry overflows 64 bits");
  }
  return out;
}

}  // namespace

std::optional<std::uint64_t> colour_vector_count(const SurgeryPresentation& p) {
  const auto radix = static_cast<std::uint64_t>(p.k.colour_modulus());
  std::uint64_t terms = 1;
  for (std::size_t i = 0; i < p.link.surgery_count(); ++i) {
    if (__builtin_mul_overflow(terms, radix, &terms)) return std::nullopt;
  }
  return terms;
}

GaussSum gauss_sum(const SurgeryPresentation& p, bool include_observed, const GaussSumOptions& options) {
  validate(p.link);
  const auto terms = colour_vector_count(p);
  if (!terms) throw Error(ErrorKind::term_limit, "colour lattice exceeds 2^64 vectors");

  const std::int64_t modulus = p.k.root_order();
  const std::int64_t radix = p.k.colour_modulus();
  const std::size_t n = p.link.size();

  IntMatrix lmod(n);
  std::vector<std::int64_t> base(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lmod(i, j) = floor_mod(p.link.linking(i, j), modulus);
    if (include_observed && p.link.roles[i] == Role::observed) {
      base[i] = floor_mod(p.link.charges[i], modulus);
    }
  }
  const auto surgery = surgery_indices(p.link);

  const unsigned workers = surgery.empty()
                               ? 1U
                               : std::clamp<unsigned>(options.threads, 1U, static_cast<unsigned>(radix));
  std::vector<std::vector<std::uint64_t>> partial(workers);
  if (workers == 1) {
    partial[0] = histogram_slice(lmod, base, surgery, radix, modulus, 0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        partial[t] = histogram_slice(lmod, base, surgery, radix, modulus, t, workers);
      });
    }
  }

  GaussSum out{CycNum(static_cast<int>(modulus)), *terms,
               std::vector<std::uint64_t>(static_cast<std::size_t>(modulus), 0)};
  for (const auto& h : partial) {
    for (std::size_t r = 0; r < h.size(); ++r) out.histogram[r] += h[r];
  }
  // Form residue r contributes zeta^{-sgn(k) r}.
  std::vector<std::uint64_t> by_power(static_cast<std::size_t>(modulus), 0);
  for (std::size_t r = 0; r < out.histogram.size(); ++r) {
    const auto power = floor_mod(-p.k.sign() * static_cast<std::int64_t>(r), modulus);
    by_power[static_cast<std::size_t>(power)] += out.histogram[r];
  }
  out.value = CycNum::from_power_counts(static_cast<int>(modulus), by_power);
  return out;
}

Invariant surgery_expectation(const SurgeryPresentation& p, const GaussSumOptions& options) {
  const GaussSum denominator = gauss_sum(p, false, options);
  if (denominator.value.is_zero()) {
    throw Error(ErrorKind::denominator_zero,
                "surgery normalisation vanishes at k = " + std::to_string(p.k.value()));
  }
  const GaussSum numerator = gauss_sum(p, true, options);
  if (numerator.value.is_zero()) return Invariant::from_value(numerator.value);
  return Invariant::from_value(numerator.value * inverse(denominator.value));
}

SurgeryPresentation blow_up(const SurgeryPresentation& p, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::invalid_argument, "blow_up: sign must be +1 or -1");
  SurgeryPresentation out = p;
  append_component(out.link, std::vector<std::int64_t>(p.link.size(), 0), sign, 0, Role::surgery,
                   unused_surgery_name(p.link));
  return out;
}

SurgeryPresentation blow_down(const SurgeryPresentation& p, std::size_t j) {
  require_index(p.link, j);
  if (p.link.roles[j] != Role::surgery) {
    throw Error(ErrorKind::invalid_argument, "NotSurgery: component " + p.link.names[j] +
                                                 " is not a surgery component");
  }
  const std::int64_t framing = p.link.linking(j, j);
  if (framing != 1 && framing != -1) {
    throw Error(ErrorKind::invalid_argument, "NotUnitFramed: component " + p.link.names[j] +
                                                 " has framing " + std::to_string(framing));
  }
  for (std::size_t i = 0; i < p.link.size(); ++i) {
    if (i != j && p.link.linking(i, j) != 0) {
      throw Error(ErrorKind::invalid_argument, "NotIsolated: component " + p.link.names[j] +
                                                   " links " + p.link.names[i]);
    }
  }
  return SurgeryPresentation{remove_component(p.link, j), p.k};
}

SurgeryPresentation handle_slide(const SurgeryPresentation& p, std::size_t i, std::size_t j, int sign) {
  require_index(p.link, i);
  require_index(p.link, j);
  if (i == j) throw Error(ErrorKind::invalid_argument, "handle_slide: cannot slide a component over itself");
  if (p.link.roles[j] != Role::surgery) {
    throw Error(ErrorKind::invalid_argument, "handle_slide: component " + p.link.names[j] +
                                                 " is not a surgery component");
  }
  if (sign != 1 && sign != -1) throw Error(ErrorKind::invalid_argument, "handle_slide: sign must be +1 or -1");

  const IntMatrix& l = p.link.linking;
  SurgeryPresentation out = p;
  IntMatrix& slid = out.link.linking;
  for (std::size_t m = 0; m < l.size(); ++m) {
    if (m == i) continue;
    slid(i, m) = checked_add(l(i, m), sign * l(j, m));
    slid(m, i) = slid(i, m);
  }
  slid(i, i) = checked_add(checked_add(l(i, i), 2 * sign * l(i, j)), l(j, j));
  return out;
}

OracleSums oracle_gauss_sums(const SurgeryPresentation& p, std::uint64_t max_terms) {
  const auto terms = colour_vector_count(p);
  if (!terms || *terms > max_terms) {
    throw Error(ErrorKind::term_limit, "float oracle would sum more than " +
                                           std::to_string(max_terms) + " colour vectors");
  }
  const FramedLink& link = p.link;
  const std::size_t n = link.size();
  const std::int64_t modulus = p.k.root_order();
  const std::int64_t radix = p.k.colour_modulus();
  const auto surgery = surgery_indices(link);

  auto phase = [&](const std::vector<std::int64_t>& charge) {
    std::int64_t residue = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        residue = (residue + floor_mod(charge[a], modulus) * floor_mod(link.linking(a, b), modulus) %
                                 modulus * floor_mod(charge[b], modulus)) %
                  modulus;
      }
    }
    const double angle = -p.k.sign() * 2.0 * std::numbers::pi * static_cast<double>(residue) /
                         static_cast<double>(modulus);
    return std::polar(1.0, angle);
  };

  std::vector<std::int64_t> with_observed(n, 0);
  std::vector<std::int64_t> without(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (link.roles[a] == Role::observed) with_observed[a] = link.charges[a];
  }
  std::vector<std::int64_t> colour(surgery.size(), 0);
  OracleSums sums{};
  for (;;) {
    for (std::size_t s = 0; s < surgery.size(); ++s) {
      with_observed[surgery[s]] = colour[s];
      without[surgery[s]] = colour[s];
    }
    sums.numerator += phase(with_observed);
    sums.denominator += phase(without);
    std::size_t s = 0;
    while (s < colour.size() && ++colour[s] == radix) colour[s++] = 0;
    if (s == colour.size()) break;
  }
  return sums;
}

std::complex<double> oracle_expectation(const SurgeryPresentation& p, std::uint64_t max_terms) {
  const OracleSums sums = oracle_gauss_sums(p, max_terms);
  if (std::abs(sums.denominator) < 1e-6) {
    throw Error(ErrorKind::denominator_zero, "float oracle: normalisation vanishes");
  }
  return sums.numerator / sums.denominator;
}

}  // namespace acsl
