#include "spinvol/construction.hpp"

#include <utility>

namespace spinvol {

bool furuta_bound(long n, long m) { return m >= n + 1; }

long default_r(long m) { return m - 2; }

void validate(const PaperParams &p) {
  if (p.n < 1 || p.m < 0)
    throw Error(ErrorCode::InvalidParameter,
                "need n >= 1 and m >= 0, got n=" + std::to_string(p.n) +
                    " m=" + std::to_string(p.m));
  if (p.n % 2 != 0)
    throw Error(ErrorCode::OddN,
                "n=" + std::to_string(p.n) +
                    " is odd; the E8 summands cannot be split into swapped "
                    "halves");
  if (!furuta_bound(p.n, p.m))
    throw Error(ErrorCode::FurutaViolation,
                "m=" + std::to_string(p.m) + " < n+1=" +
                    std::to_string(p.n + 1));
  if (p.r < 1 || p.r >= p.m || (p.m - p.r) % 2 != 0)
    throw Error(ErrorCode::BadR, "r=" + std::to_string(p.r) +
                                     " must satisfy 1 <= r < m and r = m "
                                     "mod 2 (m=" +
                                     std::to_string(p.m) + ")");
}

bool FramedLinkData::satisfies_handle_parity() const {
  for (long f : framings)
    if (f % 2 != 0) return false;
  for (std::size_t i = 0; i < linking.rows(); ++i)
    for (std::size_t j = 0; j < linking.cols(); ++j)
      if (i != j && mpz_even_p(linking(i, j).get_mpz_t())) return false;
  return true;
}

FramedLinkData make_framed_link(long r) {
  FramedLinkData out;
  out.linking = make_A(r).gram();
  out.component_count = out.linking.rows();
  out.framings.reserve(out.component_count);
  for (std::size_t i = 0; i < out.component_count; ++i)
    out.framings.push_back(out.linking(i, i).get_si());
  return out;
}

FixedPointRoster make_roster(const FramedLinkData &link) {
  FixedPointRoster out;
  out.points.push_back({"P", std::nullopt});
  for (std::size_t i = 0; i < link.framings.size(); ++i)
    out.points.push_back({"Q" + std::to_string(i + 1), link.framings[i]});
  out.points.push_back({"P'", std::nullopt});
  return out;
}

std::size_t trivial_block_offset(const PaperParams &params) {
  return static_cast<std::size_t>(8 * params.n + 2 * (params.m - params.r));
}

namespace {

// Swap the blocks [base, base + half) and [base + half, base + 2 half).
void write_half_swap(IntMatrix &g, std::size_t base, std::size_t half) {
  for (std::size_t i = 0; i < half; ++i) {
    g(base + i, base + half + i) = 1;
    g(base + half + i, base + i) = 1;
  }
}

} // namespace

PaperAction build_action(const PaperParams &params) {
  validate(params);
  const auto half_e8 = static_cast<std::size_t>(params.n / 2);
  const auto half_h = static_cast<std::size_t>((params.m - params.r) / 2);

  std::vector<IntSymForm> parts;
  const IntSymForm neg_e8 = make_e8().negated();
  for (std::size_t i = 0; i < 2 * half_e8; ++i) parts.push_back(neg_e8);
  for (std::size_t i = 0; i < 2 * half_h; ++i)
    parts.push_back(make_hyperbolic());
  parts.push_back(make_A(params.r));
  IntSymForm form = direct_sum(parts);

  const std::size_t dim = form.rank();
  const std::size_t e8_half_dim = 8 * half_e8;
  const std::size_t h_half_dim = 2 * half_h;
  const std::size_t a_offset = trivial_block_offset(params);

  IntMatrix g(dim, dim);
  write_half_swap(g, 0, e8_half_dim);
  write_half_swap(g, 2 * e8_half_dim, h_half_dim);
  for (std::size_t i = a_offset; i < dim; ++i) g(i, i) = 1;

  FramedLinkData link = make_framed_link(params.r);
  FixedPointRoster roster = make_roster(link);
  return PaperAction{params, make_equivariant(std::move(form), std::move(g)),
                     std::move(link), std::move(roster)};
}

PaperParams elliptic_preset(long k) {
  if (k < 1)
    throw Error(ErrorCode::InvalidParameter,
                "elliptic surface index must be >= 1, got " +
                    std::to_string(k));
  const long m = 2 * k - 1;
  return PaperParams{k, m, default_r(m)};
}

} // namespace spinvol
