#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "acsl/cyclotomic.hpp"
#include "acsl/framed_link.hpp"
#include "acsl/invariants.hpp"

namespace acsl {

/// Closed oriented 3-manifold given by integer surgery on the surgery
/// components of `link`, together with the observed link inside it.
struct SurgeryPresentation {
  FramedLink link;
  CouplingLevel k;

  friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;
};

struct GaussSum {
  CycNum value;
  /// (2|k|)^s colour vectors summed.
  std::uint64_t terms = 0;
  /// histogram[r] counts colour vectors whose quadratic form is r mod 4|k|.
  std::vector<std::uint64_t> histogram;
};

struct GaussSumOptions {
  /// Worker threads for the colour lattice; 0 or 1 runs inline.
  unsigned threads = 1;
};

/// Sum over surgery colour vectors c in Z_{2|k|}^s of
/// zeta_{4|k|}^{-sgn(k) Q(q + c)}. Observed charges are zeroed unless
/// include_observed is set; surgery charges are always replaced by c.
GaussSum gauss_sum(const SurgeryPresentation& p, bool include_observed,
                   const GaussSumOptions& options = {});

/// <W(L) W(surgery link)>_{S^3} / <W(surgery link)>_{S^3}.
/// Throws Error(denominator_zero) when the normalisation vanishes exactly.
Invariant surgery_expectation(const SurgeryPresentation& p, const GaussSumOptions& options = {});

/// Adds an unlinked surgery unknot with framing sign.
SurgeryPresentation blow_up(const SurgeryPresentation& p, int sign);

/// Removes the isolated +-1 framed surgery component j.
SurgeryPresentation blow_down(const SurgeryPresentation& p, std::size_t j);

/// Slides component i over surgery component j (band sum with the push-off
/// of j, oriented by sign).
SurgeryPresentation handle_slide(const SurgeryPresentation& p, std::size_t i, std::size_t j,
                                 int sign);

struct OracleSums {
  std::complex<double> numerator;
  std::complex<double> denominator;
};

inline constexpr std::uint64_t kDefaultOracleTerms = 1'000'000;

/// Direct double-precision summation, recomputing the full quadratic form
/// for every colour vector. Throws Error(term_limit) above max_terms.
OracleSums oracle_gauss_sums(const SurgeryPresentation& p,
                             std::uint64_t max_terms = kDefaultOracleTerms);

/// numerator / denominator of oracle_gauss_sums. Throws
/// Error(denominator_zero) when |denominator| < 1e-6.
std::complex<double> oracle_expectation(const SurgeryPresentation& p,
                                        std::uint64_t max_terms = kDefaultOracleTerms);

/// (2|k|)^s, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> colour_vector_count(const SurgeryPresentation& p);

}  // namespace acsl
