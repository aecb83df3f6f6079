#include "spinvol/forms.hpp"

#include <cstdlib>
#include <string>
#include <utility>

namespace spinvol {

IntSymForm::IntSymForm(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square())
    throw Error(ErrorCode::NotSquare,
                "Gram matrix is " + std::to_string(gram_.rows()) + "x" +
                    std::to_string(gram_.cols()));
  if (!gram_.is_symmetric())
    throw Error(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");
}

Integer IntSymForm::pair(std::span<const Integer> x,
                         std::span<const Integer> y) const {
  if (x.size() != rank() || y.size() != rank())
    throw Error(ErrorCode::DimensionMismatch, "vector length != form rank");
  Integer acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (sgn(y[j]) != 0) acc += x[i] * gram_(i, j) * y[j];
  }
  return acc;
}

std::string_view to_string(Parity p) {
  return p == Parity::Even ? "even" : "odd";
}

std::string_view to_string(Definiteness d) {
  switch (d) {
  case Definiteness::PositiveDefinite: return "positive_definite";
  case Definiteness::NegativeDefinite: return "negative_definite";
  case Definiteness::Indefinite: return "indefinite";
  case Definiteness::Degenerate: return "degenerate";
  case Definiteness::ZeroRank: return "zero_rank";
  }
  return "unknown";
}

IntSymForm make_e8() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  constexpr std::pair<std::size_t, std::size_t> edges[] = {
      {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (auto [a, b] : edges) {
    g(a, b) = -1;
    g(b, a) = -1;
  }
  return IntSymForm(std::move(g));
}

IntSymForm make_hyperbolic() { return IntSymForm(IntMatrix{{0, 1}, {1, 0}}); }

IntSymForm make_A(long r) {
  if (r < 1)
    throw Error(ErrorCode::InvalidParameter,
                "matrix A needs r >= 1, got " + std::to_string(r));
  const auto n = static_cast<std::size_t>(2 * r);
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(i, j) = (i != j) ? 1 : (i < n / 2 ? 0 : 2);
  return IntSymForm(std::move(g));
}

IntSymForm direct_sum(std::span<const IntSymForm> parts) {
  std::vector<IntMatrix> blocks;
  blocks.reserve(parts.size());
  for (const auto &p : parts) blocks.push_back(p.gram());
  return IntSymForm(block_diagonal(blocks));
}

IntSymForm direct_sum(std::initializer_list<IntSymForm> parts) {
  return direct_sum(std::span<const IntSymForm>(parts.begin(), parts.size()));
}

IntSymForm make_canonical(const CanonicalEvenForm &label) {
  if (label.e8_sign != 1 && label.e8_sign != -1)
    throw Error(ErrorCode::InvalidParameter, "e8_sign must be +1 or -1");
  std::vector<IntSymForm> parts;
  const IntSymForm e8 = label.e8_sign > 0 ? make_e8() : make_e8().negated();
  for (std::size_t i = 0; i < label.e8_count; ++i) parts.push_back(e8);
  for (std::size_t i = 0; i < label.h_count; ++i)
    parts.push_back(make_hyperbolic());
  return direct_sum(parts);
}

FormInvariants invariants(const IntSymForm &f) {
  FormInvariants out;
  out.rank = f.rank();
  out.inertia = inertia(f.gram());
  out.signature = out.inertia.signature();
  out.det = determinant(f.gram());
  out.parity = Parity::Even;
  for (std::size_t i = 0; i < f.rank(); ++i)
    if (mpz_odd_p(f.gram()(i, i).get_mpz_t())) {
      out.parity = Parity::Odd;
      break;
    }

  const Inertia &in = out.inertia;
  if (f.rank() == 0)
    out.definiteness = Definiteness::ZeroRank;
  else if (in.zero > 0)
    out.definiteness = Definiteness::Degenerate;
  else if (in.negative == 0)
    out.definiteness = Definiteness::PositiveDefinite;
  else if (in.positive == 0)
    out.definiteness = Definiteness::NegativeDefinite;
  else
    out.definiteness = Definiteness::Indefinite;
  return out;
}

CanonicalEvenForm classify_indefinite_even_unimodular(const IntSymForm &f) {
  const FormInvariants inv = invariants(f);
  if (inv.parity != Parity::Even)
    throw Error(ErrorCode::NotEven, "form has an odd diagonal entry");
  if (abs(inv.det) != 1)
    throw Error(ErrorCode::NotUnimodular,
                "determinant is " + inv.det.get_str());
  if (inv.definiteness != Definiteness::Indefinite)
    throw Error(ErrorCode::NotIndefinite,
                "form is " + std::string(to_string(inv.definiteness)));
  if (inv.signature % 8 != 0)
    throw Error(ErrorCode::SignatureNotMultipleOf8,
                "signature " + std::to_string(inv.signature));

  CanonicalEvenForm out;
  out.e8_count = static_cast<std::size_t>(std::labs(inv.signature) / 8);
  out.e8_sign = inv.signature > 0 ? 1 : -1;
  out.h_count = (inv.rank - 8 * out.e8_count) / 2;
  return out;
}

bool isomorphic(const IntSymForm &a, const IntSymForm &b) {
  const auto ca = classify_indefinite_even_unimodular(a);
  const auto cb = classify_indefinite_even_unimodular(b);
  return ca.rank() == cb.rank() && ca.signature() == cb.signature();
}

} // namespace spinvol
