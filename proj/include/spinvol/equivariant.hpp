#pragma once

#include <optional>

#include "spinvol/forms.hpp"

namespace spinvol {

/// Matrix of the generator g acting on the lattice basis; g * g == I.
class Involution {
public:
  /// Throws NotSquare / NotInvolution.
  explicit Involution(IntMatrix matrix);

  [[nodiscard]] const IntMatrix &matrix() const noexcept { return matrix_; }
  [[nodiscard]] std::size_t dim() const noexcept { return matrix_.rows(); }

private:
  IntMatrix matrix_;
};

/// A form together with an isometric involution.
class EquivariantForm {
public:
  EquivariantForm(IntSymForm form, Involution g);

  [[nodiscard]] const IntSymForm &form() const noexcept { return form_; }
  [[nodiscard]] const Involution &g() const noexcept { return g_; }
  [[nodiscard]] std::size_t rank() const noexcept { return form_.rank(); }

private:
  IntSymForm form_;
  Involution g_;
};

/// Throws DimensionMismatch, NotInvolution, NotIsometry.
EquivariantForm make_equivariant(IntSymForm form, IntMatrix g);

/// Ranks of the trivial, sign and free Z[Z2] summands: V = Z+^a + Z-^b +
/// Z[Z2]^c.
struct ModuleDecomposition {
  std::size_t trivial_rank = 0;
  std::size_t sign_rank = 0;
  std::size_t free_rank = 0;

  friend bool operator==(const ModuleDecomposition &,
                         const ModuleDecomposition &) = default;
};

/// a and b are the F2-dimensions of the Tate groups ker(g-1)/im(g+1) and
/// ker(g+1)/im(g-1); c = rank ker(g-1) - a.
ModuleDecomposition decompose_module(const EquivariantForm &ef);

/// Psi(v, gv) is even for every v. Cross terms Psi(v, gw) + Psi(w, gv)
/// equal 2 Psi(v, gw), so checking basis vectors suffices.
bool check_even_pairing(const EquivariantForm &ef);

/// Signature of the form on the +1 eigenspace minus the signature on the
/// -1 eigenspace.
long g_signature(const EquivariantForm &ef);

struct RealizationReport {
  bool form_even = false;
  bool form_unimodular = false;
  bool condition1 = false; ///< no sign summands: V = T + F
  ModuleDecomposition decomposition;
  bool condition2 = false; ///< Psi(v, gv) even
  bool condition3 = false; ///< g-signature zero
  long g_signature = 0;
  std::size_t trivial_rank = 0;
  /// trivial_rank + 2, present only when every check passes.
  std::optional<std::size_t> fixed_point_count;

  [[nodiscard]] bool all_pass() const {
    return form_even && form_unimodular && condition1 && condition2 &&
           condition3;
  }
};

/// Checks the hypotheses of the locally linear realization theorem for
/// involutions. Failures are reported, never thrown.
RealizationReport check_edmonds_ewing(const EquivariantForm &ef);

} // namespace spinvol
