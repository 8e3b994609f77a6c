// Locating the invariant orbit closure inside
// [t, t + 1/beta], and the quantities derived from it: Freq, Delta, Xi and
// orbit diameters.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "betaorbit/digit_stream.hpp"
#include "betaorbit/mechanical.hpp"
#include "betaorbit/real_value.hpp"
#include "betaorbit/words.hpp"

namespace betaorbit {

inline constexpr std::size_t kDefaultMaxDepth = 512;

enum class CaseTag { Ma, Mb, Mc, G1a, G1b, G1c, G2a, G2b, G2c, G3a, G3b, G3c, G3dAddendum };

/// "M.a", ..., "G.3d-addendum".
std::string_view to_string(CaseTag c);

/// One comparison that fired: left `relation` right, with the literal words.
struct CertificateEntry {
  std::string left;
  std::string relation;
  std::string right;
};

struct OrbitResult {
  EpWord generator;
  Rational frequency;
  CaseTag case_tag;
  Letter a = 0;
  Letter b = 1;
  std::vector<CertificateEntry> certificate;
};

/// The case analysis could not finish within the depth budget. [lo, hi]
/// encloses the frequency.
class Undetermined : public std::runtime_error {
 public:
  Undetermined(const std::string& what, Rational lo, Rational hi)
      : std::runtime_error(what), lo_(std::move(lo)), hi_(std::move(hi)) {}
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }

 private:
  Rational lo_;
  Rational hi_;
};

/// Runs the case analysis on d-bar(t) = a s.
OrbitResult dispatch_orbit(Letter a, DigitStream s, std::size_t max_depth = kDefaultMaxDepth);

/// The invariant orbit closure inside [t, t + 1/beta], 0 <= t <= 1 - 1/beta.
OrbitResult locate_orbit(const RealValue& t, const BetaNumber& beta,
                         std::size_t max_depth = kDefaultMaxDepth);

struct FreqResult {
  Rational frequency;
  /// Absent for integer bases.
  std::optional<OrbitResult> orbit;
};

FreqResult freq_of_beta(const BetaNumber& beta, std::size_t max_depth = kDefaultMaxDepth);

/// Delta(0) = 1, Delta(n) = n + 1, otherwise the base whose greedy
/// expansion of 1 is b z_{p,q} b.
RealValue delta(const Rational& alpha);

/// (s'_{alpha,0})_beta for rational alpha > 0. DomainError when beta < Delta(alpha).
RealValue xi(const Rational& alpha, const BetaNumber& beta);
/// Enclosure of Xi for a real slope from an n-letter prefix plus tail bound.
Interval xi_enclosure(const RealValue& alpha, const BetaNumber& beta, std::size_t n);

namespace diam {
struct Mechanical {
  Rational slope;
  RealValue value;
};
struct Skew {
  Rational slope;
  std::size_t stable_after;
  RealValue value;
};
struct NotSmall {
  std::string reason;
};
/// The expansion did not become periodic within the horizon.
struct Undecided {
  std::size_t horizon;
};
}  // namespace diam

using DiamReport = std::variant<diam::Mechanical, diam::Skew, diam::NotSmall, diam::Undecided>;

/// (beta^(q-1) - 1) / (beta^q - 1)
RealValue diam_formula(const BetaNumber& beta, std::size_t q);

DiamReport diam_classify(const RealValue& xi_val, const BetaNumber& beta,
                         std::size_t horizon = kDefaultMaxDepth);
std::string describe(const DiamReport& r);

/// Closed form of (w)_beta for an integer base, through the periodic or the
/// preperiodic formula.
Rational rational_xi_reconstruct(const EpWord& w, const Integer& beta);

}  // namespace betaorbit
