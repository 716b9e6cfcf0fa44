#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cwpower/error.hpp"
#include "cwpower/linalg.hpp"

namespace cwp {

// L = image of P(W) under the rows of B: (n+1) x (k+1), full column rank.
class LinearSpaceEmbedding {
 public:
  explicit LinearSpaceEmbedding(QMatrix b);
  // L = V(rows of A) in P^n, with a kernel basis as embedding matrix.
  static LinearSpaceEmbedding from_equations(const QMatrix& a);

  const QMatrix& matrix() const { return b_; }
  unsigned n() const { return static_cast<unsigned>(b_.rows()) - 1; }
  unsigned k() const { return static_cast<unsigned>(b_.cols()) - 1; }
  bool is_zero_row(std::size_t i) const;

 private:
  QMatrix b_;
};

struct MatroidSummary {
  unsigned n = 0;
  unsigned k = 0;
  std::vector<unsigned> coloops;
  // Sorted blocks, ordered by smallest element.
  std::vector<std::vector<unsigned>> components;

  unsigned s() const { return static_cast<unsigned>(coloops.size()); }
  unsigned t() const { return static_cast<unsigned>(components.size()); }
};

// Components via fundamental circuits of a greedy row basis. basis_order
// fixes the scan order for that basis (default 0..n); the partition does
// not depend on it.
MatroidSummary matroid_summary(const LinearSpaceEmbedding& l,
                               const std::vector<unsigned>& basis_order = {});

// r^(k + s - t + 1).
Integer degree_linear_power(const LinearSpaceEmbedding& l, unsigned r);
Integer degree_linear_power(const MatroidSummary& m, unsigned r);

struct GroupData {
  Integer fix;
  Integer stab;
  unsigned r = 1;
};

GroupData stab_fix_linear(const LinearSpaceEmbedding& l, unsigned r, const Budget& budget = {});

// (fix / stab) * r^dim * deg.
Rational degree_from_group_data(const GroupData& g, unsigned dim, const Integer& deg);

using MembershipTest = std::function<bool(const std::vector<Cyc>&)>;
using PointSampler = std::function<std::vector<Cyc>(std::size_t)>;

// One-sided counts: tau is kept in Stab when every sample stays on X and in
// Fix when it fixes every sample.
GroupData stab_fix_sampled(const MembershipTest& membership, const PointSampler& sampler, unsigned r,
                           unsigned nvars, std::size_t samples = 25, const Budget& budget = {});

// SO(m) in P^(m^2): coordinates (h, M_11, M_12, ..., M_mm).
bool so_membership(const std::vector<Cyc>& point, unsigned m);
// Cayley transform (I - S)(I + S)^-1 of a random rational skew matrix.
std::vector<Cyc> so_cayley_sample(unsigned m, std::uint64_t seed);
GroupData stab_fix_so(unsigned m, unsigned r, std::uint64_t seed, std::size_t samples = 25,
                      const Budget& budget = {});

struct OrthoDegrees {
  Integer det;
  Integer deg_o;
  Integer deg_so;
  Integer deg_o_squared;
};

OrthoDegrees ortho_degree(unsigned m);

}  // namespace cwp
