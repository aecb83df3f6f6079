#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spinvol/construction.hpp"

namespace spinvol {

/// Relation between two fixed points, either of their sign assignments
/// epsilon or of their spin types. Only relative values are ever derived.
enum class RelativeSign { Same, Opposite };

/// epsilon'(P, R) = epsilon'(P, Q) epsilon'(Q, R).
constexpr RelativeSign operator*(RelativeSign a, RelativeSign b) {
  return a == b ? RelativeSign::Same : RelativeSign::Opposite;
}

constexpr int as_factor(RelativeSign s) {
  return s == RelativeSign::Same ? 1 : -1;
}

std::string_view to_string(RelativeSign s);

/// Sign relation between the centre P of B0 and the centre of a handle
/// attached along an unknot bounding an invariant disk with this framing.
/// framing = 2 mod 4 gives Same, 0 mod 4 gives Opposite; throws OddFraming.
RelativeSign epsilon_relation(long framing);

/// Spin-type relation for the same configuration; Same iff framing = 2
/// mod 4. Throws OddFraming.
RelativeSign spin_type_relation(long framing);

/// Equal epsilon iff equal spin type.
constexpr RelativeSign epsilon_spin_bridge(RelativeSign eps) { return eps; }

/// Sums S = sum of epsilon over k fixed points compatible with the index
/// identities k+ - k- = S/4, k+ + k- = -sigma/8, k+ and k- even.
/// Throws SigmaNotSpin when sigma is not a multiple of 8.
std::vector<long> admissible_epsilon_sums(long sigma, long k);

struct SpinPartition {
  long n_plus = 0;
  long n_minus = 0;

  friend bool operator==(const SpinPartition &,
                         const SpinPartition &) = default;
};

/// Ordered pairs (n+, n-) with n+ + n- = k and n+ - n- = sigma/2 mod 16,
/// sorted by n+. Throws InvalidParameter for odd sigma or negative k.
std::vector<SpinPartition> rohlin_admissible_pairs(long sigma, long k);

/// Representative of x mod 16 in [-8, 8).
long symmetric_mod16(long x);

/// What a smooth action would force on the fixed points of a
/// constructed action.
struct SmoothFixData {
  /// relation to P of every roster point, in roster order
  std::vector<RelativeSign> epsilon_to_p;
  std::vector<RelativeSign> spin_to_p;
  /// every value epsilon(P) + sum_Q epsilon(Q) + epsilon(P') can take
  std::vector<long> epsilon_sum_candidates;
  /// the unique candidate divisible by 8
  long epsilon_sum = 0;
  RelativeSign p_pprime = RelativeSign::Same;
  /// unordered; stored with n_plus <= n_minus
  SpinPartition partition;
};

/// Throws OddFraming, DeductionFailed.
SmoothFixData derive_smooth_fixdata(const PaperAction &action);

enum class VerdictKind { Nonsmoothable, Inconclusive };

std::string_view to_string(VerdictKind v);

inline constexpr int kCertificateVersion = 1;

/// Every field is a function of params alone.
struct Certificate {
  int version = kCertificateVersion;
  PaperParams params;
  long rank = 0;
  ModuleDecomposition decomposition;
  long sigma = 0;
  long fixed_count = 0;
  std::vector<long> framings;
  std::vector<long> framing_classes; ///< framings mod 4
  std::vector<long> epsilon_sum_candidates;
  long epsilon_sum = 0;
  RelativeSign p_pprime = RelativeSign::Opposite;
  SpinPartition partition;
  long rohlin_residue = 0; ///< (sigma/2 - (n+ - n-)) mod 16, in [-8, 8)
  VerdictKind verdict = VerdictKind::Inconclusive;
  /// Rohlin-admissible partitions; empty unless the verdict is
  /// Inconclusive.
  std::vector<SpinPartition> admissible_partitions;

  friend bool operator==(const Certificate &, const Certificate &) = default;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  Certificate certificate;
  std::vector<SpinPartition> admissible_partitions;
};

/// Builds the action for params, derives the partition a smooth action
/// would have and tests it against the Rohlin congruence.
Verdict certify(const PaperParams &params);

struct ReplayResult {
  bool ok = false;
  std::string divergence; ///< first mismatching field, empty when ok

  explicit operator bool() const { return ok; }
};

/// Field-by-field comparison of a claimed certificate against a freshly
/// computed one, reporting the first divergence.
ReplayResult compare_certificates(const Certificate &claimed,
                                  const Certificate &fresh);

/// Recomputes the certificate from its params and compares every field.
ReplayResult verify_certificate(const Certificate &cert);

} // namespace spinvol
