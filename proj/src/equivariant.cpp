#include "spinvol/equivariant.hpp"

#include <string>
#include <utility>

namespace spinvol {

Involution::Involution(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square())
    throw Error(ErrorCode::NotSquare, "involution matrix must be square");
  if (matrix_ * matrix_ != IntMatrix::identity(matrix_.rows()))
    throw Error(ErrorCode::NotInvolution, "g * g != identity");
}

EquivariantForm::EquivariantForm(IntSymForm form, Involution g)
    : form_(std::move(form)), g_(std::move(g)) {
  if (form_.rank() != g_.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "form has rank " + std::to_string(form_.rank()) +
                    " but g acts on dimension " + std::to_string(g_.dim()));
  const IntMatrix &m = g_.matrix();
  if (m.transpose() * form_.gram() * m != form_.gram())
    throw Error(ErrorCode::NotIsometry, "g^T Psi g != Psi");
}

EquivariantForm make_equivariant(IntSymForm form, IntMatrix g) {
  if (!g.is_square() || g.rows() != form.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "g is " + std::to_string(g.rows()) + "x" +
                    std::to_string(g.cols()) + ", form has rank " +
                    std::to_string(form.rank()));
  return EquivariantForm(std::move(form), Involution(std::move(g)));
}

namespace {

struct TateGroup {
  std::size_t kernel_rank = 0;
  std::size_t f2_dim = 0;
};

// ker(kill) / im(image), where im(image) lies inside ker(kill).
TateGroup tate_group(const IntMatrix &kill, const IntMatrix &image) {
  const auto snf = smith_normal_form(kill);
  const std::size_t k = kill.cols() - snf.rank;
  // v_inv maps lattice vectors to SNF coordinates; kernel vectors live in
  // the trailing k coordinates.
  const IntMatrix coords = snf.v_inv.row_block(snf.rank, k) * image;
  const auto factors = smith_normal_form(coords).invariant_factors();

  TateGroup out{k, 0};
  for (std::size_t i = 0; i < k; ++i) {
    // missing factors are zero, i.e. free quotient; count them too so an
    // inconsistent input trips the rank identity check below
    if (i >= factors.size() || mpz_even_p(factors[i].get_mpz_t()))
      ++out.f2_dim;
  }
  return out;
}

} // namespace

ModuleDecomposition decompose_module(const EquivariantForm &ef) {
  const IntMatrix &g = ef.g().matrix();
  const IntMatrix id = IntMatrix::identity(ef.rank());
  const IntMatrix minus = g - id;
  const IntMatrix plus = g + id;

  const TateGroup h0 = tate_group(minus, plus);
  const TateGroup h1 = tate_group(plus, minus);

  ModuleDecomposition out;
  out.trivial_rank = h0.f2_dim;
  out.sign_rank = h1.f2_dim;
  if (h0.kernel_rank < out.trivial_rank)
    throw Error(ErrorCode::Internal, "Tate group larger than fixed lattice");
  out.free_rank = h0.kernel_rank - out.trivial_rank;

  if (out.sign_rank + out.free_rank != h1.kernel_rank ||
      out.trivial_rank + out.sign_rank + 2 * out.free_rank != ef.rank())
    throw Error(ErrorCode::Internal, "Z[Z2] rank identities violated");
  return out;
}

bool check_even_pairing(const EquivariantForm &ef) {
  const IntMatrix pg = ef.form().gram() * ef.g().matrix();
  for (std::size_t i = 0; i < ef.rank(); ++i)
    if (mpz_odd_p(pg(i, i).get_mpz_t())) return false;
  return true;
}

namespace {

long restricted_signature(const IntMatrix &gram, const IntMatrix &kill) {
  const IntMatrix basis = integer_kernel(kill);
  if (basis.cols() == 0) return 0;
  return inertia(basis.transpose() * gram * basis).signature();
}

} // namespace

long g_signature(const EquivariantForm &ef) {
  const IntMatrix &g = ef.g().matrix();
  const IntMatrix id = IntMatrix::identity(ef.rank());
  const IntMatrix &gram = ef.form().gram();
  return restricted_signature(gram, g - id) - restricted_signature(gram, g + id);
}

RealizationReport check_edmonds_ewing(const EquivariantForm &ef) {
  RealizationReport rep;
  const FormInvariants inv = invariants(ef.form());
  rep.form_even = inv.parity == Parity::Even;
  rep.form_unimodular = abs(inv.det) == 1;

  rep.decomposition = decompose_module(ef);
  rep.trivial_rank = rep.decomposition.trivial_rank;
  rep.condition1 = rep.decomposition.sign_rank == 0;
  rep.condition2 = check_even_pairing(ef);
  rep.g_signature = g_signature(ef);
  rep.condition3 = rep.g_signature == 0;
  if (rep.all_pass()) rep.fixed_point_count = rep.trivial_rank + 2;
  return rep;
}

} // namespace spinvol
