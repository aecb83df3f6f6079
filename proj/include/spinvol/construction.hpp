#pragma once

#include <string>
#include <vector>

#include "spinvol/equivariant.hpp"

namespace spinvol {

/// Target form n(-E8) + mH and the rank parameter r of the trivial part.
struct PaperParams {
  long n = 0;
  long m = 0;
  long r = 0;

  friend bool operator==(const PaperParams &, const PaperParams &) = default;
};

/// Throws InvalidParameter (n < 1 or m < 0), OddN, FurutaViolation, BadR,
/// checked in that order.
void validate(const PaperParams &p);

/// m >= n + 1.
bool furuta_bound(long n, long m);

/// Default r when none is given: the largest admissible value, m - 2.
long default_r(long m);

/// Linking matrix and framings of the 2r-component Hopf link realizing A.
struct FramedLinkData {
  IntMatrix linking;
  std::vector<long> framings;
  std::size_t component_count = 0;

  /// Framings even and pairwise linking numbers odd.
  [[nodiscard]] bool satisfies_handle_parity() const;
};

FramedLinkData make_framed_link(long r);

struct FixedPoint {
  std::string name;
  std::optional<long> framing; ///< set for the handle points Q_i only
};

/// Fixed points in order P, Q_1, ..., Q_{2r}, P'.
struct FixedPointRoster {
  std::vector<FixedPoint> points;

  [[nodiscard]] std::size_t size() const { return points.size(); }
};

FixedPointRoster make_roster(const FramedLinkData &link);

/// The equivariant intersection form, its framed link and fixed points.
struct PaperAction {
  PaperParams params;
  EquivariantForm equivariant;
  FramedLinkData link;
  FixedPointRoster roster;
};

/// Basis order: (n/2)(-E8) | (n/2)(-E8) | h H | h H | A(r), with
/// h = (m - r)/2. g swaps the paired halves and fixes the A block.
PaperAction build_action(const PaperParams &params);

/// Offset of the A block inside the basis used by build_action.
std::size_t trivial_block_offset(const PaperParams &params);

/// (n, m) = (k, 2k - 1) with r = m - 2. No validation; build_action
/// rejects presets that do not satisfy the parameter invariants.
PaperParams elliptic_preset(long k);

} // namespace spinvol
