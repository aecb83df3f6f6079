#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "spinvol/intlinalg.hpp"

namespace spinvol {

/// Integral symmetric bilinear form, stored as its Gram matrix.
class IntSymForm {
public:
  IntSymForm() = default;
  /// Throws NotSquare / NotSymmetric.
  explicit IntSymForm(IntMatrix gram);

  [[nodiscard]] const IntMatrix &gram() const noexcept { return gram_; }
  [[nodiscard]] std::size_t rank() const noexcept { return gram_.rows(); }

  /// Psi(x, y) for coordinate vectors.
  [[nodiscard]] Integer pair(std::span<const Integer> x,
                             std::span<const Integer> y) const;

  [[nodiscard]] IntSymForm negated() const { return IntSymForm(-gram_); }

  friend bool operator==(const IntSymForm &, const IntSymForm &) = default;

private:
  IntMatrix gram_;
};

enum class Parity { Even, Odd };

enum class Definiteness {
  PositiveDefinite,
  NegativeDefinite,
  Indefinite,
  Degenerate,
  ZeroRank,
};

std::string_view to_string(Parity p);
std::string_view to_string(Definiteness d);

struct FormInvariants {
  std::size_t rank = 0;
  Inertia inertia;
  long signature = 0;
  Parity parity = Parity::Even;
  Integer det;
  Definiteness definiteness = Definiteness::ZeroRank;

  friend bool operator==(const FormInvariants &,
                         const FormInvariants &) = default;
};

/// Label e8_count * (e8_sign E8) + h_count * H of an indefinite even
/// unimodular form.
struct CanonicalEvenForm {
  std::size_t e8_count = 0;
  int e8_sign = -1;
  std::size_t h_count = 0;

  [[nodiscard]] std::size_t rank() const { return 8 * e8_count + 2 * h_count; }
  [[nodiscard]] long signature() const {
    return 8L * e8_sign * static_cast<long>(e8_count);
  }
  /// The sign label is irrelevant when there are no E8 summands.
  friend bool operator==(const CanonicalEvenForm &a,
                         const CanonicalEvenForm &b) {
    return a.e8_count == b.e8_count && a.h_count == b.h_count &&
           (a.e8_count == 0 || a.e8_sign == b.e8_sign);
  }
};

/// E8 Cartan matrix. Node order: a chain 0-2-3-4-5-6-7 with node 1
/// attached to node 3 (Bourbaki labelling shifted to start at zero).
/// Positive definite; negate for -E8.
IntSymForm make_e8();

/// H = [[0, 1], [1, 0]].
IntSymForm make_hyperbolic();

/// 2r x 2r matrix: first r diagonal entries 0, last r diagonal entries 2,
/// every off-diagonal entry 1. Throws InvalidParameter for r < 1.
IntSymForm make_A(long r);

IntSymForm direct_sum(std::span<const IntSymForm> parts);
IntSymForm direct_sum(std::initializer_list<IntSymForm> parts);

/// e8_count copies of (sign * E8) followed by h_count copies of H.
IntSymForm make_canonical(const CanonicalEvenForm &label);

FormInvariants invariants(const IntSymForm &f);

/// Indefinite even unimodular forms are classified by rank and signature.
/// Throws NotEven, NotUnimodular, NotIndefinite, SignatureNotMultipleOf8.
CanonicalEvenForm classify_indefinite_even_unimodular(const IntSymForm &f);

/// Same preconditions and errors as the classifier.
bool isomorphic(const IntSymForm &a, const IntSymForm &b);

} // namespace spinvol
