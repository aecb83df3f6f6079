#include "spinvol/obstruction.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace spinvol {

std::string_view to_string(RelativeSign s) {
  return s == RelativeSign::Same ? "same" : "opposite";
}

std::string_view to_string(VerdictKind v) {
  return v == VerdictKind::Nonsmoothable ? "nonsmoothable" : "inconclusive";
}

namespace {

long mod4(long x) { return ((x % 4) + 4) % 4; }

void require_even_framing(long framing) {
  if (framing % 2 != 0)
    throw Error(ErrorCode::OddFraming,
                "framing " + std::to_string(framing) +
                    " is odd; equivariant handles need even framings");
}

} // namespace

RelativeSign epsilon_relation(long framing) {
  require_even_framing(framing);
  return mod4(framing) == 2 ? RelativeSign::Same : RelativeSign::Opposite;
}

RelativeSign spin_type_relation(long framing) {
  require_even_framing(framing);
  return mod4(framing) == 2 ? RelativeSign::Same : RelativeSign::Opposite;
}

long symmetric_mod16(long x) {
  long r = ((x % 16) + 16) % 16;
  return r >= 8 ? r - 16 : r;
}

std::vector<long> admissible_epsilon_sums(long sigma, long k) {
  if (sigma % 8 != 0)
    throw Error(ErrorCode::SigmaNotSpin,
                "signature " + std::to_string(sigma) +
                    " is not a multiple of 8");
  if (k < 0)
    throw Error(ErrorCode::InvalidParameter, "negative fixed-point count");
  const long total = -sigma / 8; // k+ + k-
  std::vector<long> out;
  // both k+ and k- even forces an even total
  if (total % 2 != 0) return out;
  for (long s = -k; s <= k; ++s) {
    if ((s - k) % 2 != 0 || s % 4 != 0) continue;
    // k+ - k- = s/4 and k- even means s/4 = total mod 4
    if (mod4(s / 4 - total) != 0) continue;
    out.push_back(s);
  }
  return out;
}

std::vector<SpinPartition> rohlin_admissible_pairs(long sigma, long k) {
  if (sigma % 2 != 0)
    throw Error(ErrorCode::InvalidParameter,
                "signature " + std::to_string(sigma) + " is odd");
  if (k < 0)
    throw Error(ErrorCode::InvalidParameter, "negative fixed-point count");
  std::vector<SpinPartition> out;
  for (long plus = 0; plus <= k; ++plus) {
    const long minus = k - plus;
    if (symmetric_mod16(plus - minus - sigma / 2) == 0)
      out.push_back({plus, minus});
  }
  return out;
}

SmoothFixData derive_smooth_fixdata(const PaperAction &action) {
  const auto &points = action.roster.points;
  if (points.size() < 2)
    throw Error(ErrorCode::DeductionFailed, "roster lacks P and P'");

  SmoothFixData out;
  out.epsilon_to_p.push_back(RelativeSign::Same);
  long handle_sum = 0; // sum of epsilon(Q_i) / epsilon(P)
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    const long framing = points[i].framing.value();
    const RelativeSign rel = epsilon_relation(framing);
    out.epsilon_to_p.push_back(rel);
    handle_sum += as_factor(rel);
  }

  // epsilon(P) = +-1 and epsilon(P') = +-epsilon(P); a smooth action needs
  // the total to be divisible by 8.
  std::set<long> candidates;
  std::vector<RelativeSign> surviving;
  for (RelativeSign last : {RelativeSign::Same, RelativeSign::Opposite}) {
    const long relative = 1 + handle_sum + as_factor(last);
    candidates.insert(relative);
    candidates.insert(-relative);
    if (relative % 8 == 0) surviving.push_back(last);
  }
  out.epsilon_sum_candidates.assign(candidates.begin(), candidates.end());
  if (surviving.size() != 1)
    throw Error(ErrorCode::DeductionFailed,
                surviving.empty()
                    ? "no assignment for P' makes the epsilon sum a multiple "
                      "of 8"
                    : "epsilon sum does not determine P'");
  out.p_pprime = surviving.front();
  out.epsilon_sum = 1 + handle_sum + as_factor(out.p_pprime);
  out.epsilon_to_p.push_back(out.p_pprime);

  long same = 0, opposite = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const RelativeSign spin = epsilon_spin_bridge(out.epsilon_to_p[i]);
    if (points[i].framing && spin != spin_type_relation(*points[i].framing))
      throw Error(ErrorCode::DeductionFailed,
                  "spin type of " + points[i].name +
                      " disagrees with its framing class");
    out.spin_to_p.push_back(spin);
    (spin == RelativeSign::Same ? same : opposite) += 1;
  }
  out.partition = {std::min(same, opposite), std::max(same, opposite)};
  return out;
}

Verdict certify(const PaperParams &params) {
  const PaperAction action = build_action(params);
  const RealizationReport rep = check_edmonds_ewing(action.equivariant);
  if (!rep.all_pass() || !rep.fixed_point_count ||
      *rep.fixed_point_count != action.roster.size())
    throw Error(ErrorCode::Internal,
                "constructed action fails the realization conditions");

  const SmoothFixData fix = derive_smooth_fixdata(action);

  Certificate cert;
  cert.params = params;
  cert.rank = static_cast<long>(action.equivariant.rank());
  cert.decomposition = rep.decomposition;
  cert.sigma = inertia(action.equivariant.form().gram()).signature();
  if (cert.sigma != -8 * params.n)
    throw Error(ErrorCode::Internal, "signature is not -8n");
  cert.fixed_count = static_cast<long>(*rep.fixed_point_count);
  cert.framings = action.link.framings;
  for (long f : cert.framings) cert.framing_classes.push_back(mod4(f));
  cert.epsilon_sum_candidates = fix.epsilon_sum_candidates;
  cert.epsilon_sum = fix.epsilon_sum;
  cert.p_pprime = fix.p_pprime;
  cert.partition = fix.partition;

  const long diff = fix.partition.n_plus - fix.partition.n_minus;
  cert.rohlin_residue = symmetric_mod16(cert.sigma / 2 - diff);
  // the partition is unordered, so either labelling may satisfy Rohlin
  const bool admissible = cert.rohlin_residue == 0 ||
                          symmetric_mod16(cert.sigma / 2 + diff) == 0;
  cert.verdict =
      admissible ? VerdictKind::Inconclusive : VerdictKind::Nonsmoothable;
  if (admissible)
    cert.admissible_partitions =
        rohlin_admissible_pairs(cert.sigma, cert.fixed_count);

  Verdict out;
  out.kind = cert.verdict;
  out.admissible_partitions = cert.admissible_partitions;
  out.certificate = std::move(cert);
  return out;
}

namespace {

template <class T>
bool differs(const char *field, const T &got, const T &want,
             std::string &why) {
  if (got == want) return false;
  why = field;
  return true;
}

} // namespace

ReplayResult compare_certificates(const Certificate &cert,
                                  const Certificate &fresh) {
  ReplayResult out;
  std::string why;
  if (differs("params", cert.params, fresh.params, why) ||
      differs("version", cert.version, fresh.version, why) ||
      differs("rank", cert.rank, fresh.rank, why) ||
      differs("decomposition", cert.decomposition, fresh.decomposition, why) ||
      differs("sigma", cert.sigma, fresh.sigma, why) ||
      differs("fixed_count", cert.fixed_count, fresh.fixed_count, why) ||
      differs("framings", cert.framings, fresh.framings, why) ||
      differs("framing_classes", cert.framing_classes, fresh.framing_classes,
              why) ||
      differs("epsilon_sum_candidates", cert.epsilon_sum_candidates,
              fresh.epsilon_sum_candidates, why) ||
      differs("epsilon_sum", cert.epsilon_sum, fresh.epsilon_sum, why) ||
      differs("p_pprime", cert.p_pprime, fresh.p_pprime, why) ||
      differs("partition", cert.partition, fresh.partition, why) ||
      differs("rohlin_residue", cert.rohlin_residue, fresh.rohlin_residue,
              why) ||
      differs("verdict", cert.verdict, fresh.verdict, why) ||
      differs("admissible_partitions", cert.admissible_partitions,
              fresh.admissible_partitions, why)) {
    out.divergence = why;
    return out;
  }
  out.ok = true;
  return out;
}

ReplayResult verify_certificate(const Certificate &cert) {
  // cheap stages first, so a tampered params block that happens to be
  // valid does not pay for the full chain before being rejected
  ReplayResult out;
  if (cert.version != kCertificateVersion) {
    out.divergence = "version";
    return out;
  }
  Certificate fresh;
  try {
    const PaperAction action = build_action(cert.params);
    if (cert.rank != static_cast<long>(action.equivariant.rank())) {
      out.divergence = "rank";
      return out;
    }
    fresh = certify(cert.params).certificate;
  } catch (const Error &e) {
    out.divergence = std::string("params: ") + e.what();
    return out;
  }
  return compare_certificates(cert, fresh);
}

} // namespace spinvol
