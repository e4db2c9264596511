#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "acsl/cyclotomic.hpp"
#include "acsl/framed_link.hpp"

namespace acsl {

/// Nonzero Chern-Simons coupling k. Colours live in Z_{2|k|}; phases are
/// powers of zeta_{4|k|}.
class CouplingLevel {
 public:
  explicit CouplingLevel(std::int64_t k);

  std::int64_t value() const noexcept { return k_; }
  int sign() const noexcept { return k_ > 0 ? 1 : -1; }
  std::int64_t colour_modulus() const noexcept { return 2 * magnitude(); }
  int root_order() const noexcept { return static_cast<int>(4 * magnitude()); }

  friend bool operator==(const CouplingLevel&, const CouplingLevel&) = default;

 private:
  std::int64_t magnitude() const noexcept { return k_ > 0 ? k_ : -k_; }
  std::int64_t k_;
};

/// zeta_order^exponent with 0 <= exponent < order.
struct PhaseExponent {
  std::int64_t exponent = 0;
  int order = 1;

  /// exp(-2 pi i Q / 4k) written as zeta_{4|k|}^{-sgn(k) Q mod 4|k|}.
  static PhaseExponent from_form_residue(std::int64_t form_residue, const CouplingLevel& k);

  friend bool operator==(const PhaseExponent&, const PhaseExponent&) = default;
};

struct Invariant {
  CycNum value;
  bool is_zero = false;
  std::complex<double> numeric;
  /// Set when value is a single root of unity.
  std::optional<PhaseExponent> phase;

  static Invariant from_value(CycNum value);
  static Invariant from_phase(const PhaseExponent& phase);

  friend bool operator==(const Invariant& x, const Invariant& y) {
    return x.is_zero == y.is_zero && x.value == y.value;
  }
};

enum class RoleFilter { observed, surgery, all };

/// q^T L q over the components selected by `filter`; other charges count as
/// zero. Throws Error(invalid_argument) on 64-bit overflow.
std::int64_t quadratic_form(const FramedLink& link, RoleFilter filter = RoleFilter::observed);

/// quadratic_form reduced into [0, modulus) without intermediate overflow.
std::int64_t quadratic_form_residue(const FramedLink& link, RoleFilter filter,
                                    std::int64_t modulus);

/// <W(L)>_k in S^3 for an all-observed link.
Invariant s3_expectation(const FramedLink& link, const CouplingLevel& k);

/// Replaces each observed charge by its residue in [0, 2|k|).
FramedLink reduce_colours(const FramedLink& link, const CouplingLevel& k);

/// Orientation reversal of component j: q_j -> -q_j.
FramedLink reverse_component(const FramedLink& link, std::size_t j);

/// Drops every observed component with zero charge.
FramedLink drop_uncoloured(const FramedLink& link);

/// Replaces component j (charge q, framing f) by its two-component satellite
/// with charges q + sign and -sign. Both new components copy j's linking with
/// every other component and have mutual linking and self-framings f.
/// The new components sit at positions j and j + 1.
FramedLink satellite_expand(const FramedLink& link, std::size_t j, int sign);

/// Expands observed components until every observed charge is +1 or -1,
/// after dropping uncoloured components. Surgery components are untouched.
FramedLink simplicial_satellite(const FramedLink& link);

/// reduce_colours followed by simplicial_satellite.
FramedLink simplicial_satellite(const FramedLink& link, const CouplingLevel& k);

}  // namespace acsl
