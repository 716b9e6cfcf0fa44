#pragma once

#include <optional>
#include <vector>

#include "cwpower/error.hpp"
#include "cwpower/linalg.hpp"
#include "cwpower/mpoly.hpp"

namespace cwp {

// Linear subspace of P^n stored by the reduced row echelon form of its
// equations, which makes equality structural.
class Subspace {
 public:
  static Subspace whole(unsigned nvars);
  static Subspace from_equations(CycMatrix equations);
  // Common zeros of linear forms.
  static Subspace from_forms(const std::vector<MPoly>& forms);
  static Subspace point(const std::vector<Cyc>& p);
  // Span of the given vectors (rows).
  static Subspace span(const CycMatrix& vectors);

  unsigned nvars() const { return nvars_; }
  const CycMatrix& equations() const { return eq_; }
  // Projective dimension; -1 for the empty subspace.
  int dim() const { return static_cast<int>(nvars_) - static_cast<int>(eq_.rows()) - 1; }
  bool empty() const { return dim() < 0; }
  // Spanning vectors as rows.
  const CycMatrix& basis() const { return basis_; }

  Subspace intersect(const std::vector<Cyc>& equation) const;
  // other is a subset of this.
  bool contains(const Subspace& other) const;
  bool contains_point(const std::vector<Cyc>& point) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.nvars_ == b.nvars_ && a.eq_ == b.eq_;
  }
  // Total order: dimension, then equation entries.
  static int compare(const Subspace& a, const Subspace& b);

 private:
  void set_equations(CycMatrix reduced);

  unsigned nvars_ = 0;
  CycMatrix eq_;
  CycMatrix basis_;
};

// Maximal subspaces, sorted, none containing another.
using SubspaceSet = std::vector<Subspace>;

// Coefficient vector of a linear form.
std::vector<Cyc> linear_coefficients(const MPoly& f);

// Maximal linear subspaces whose union is the intersection of the
// preimages phi_r^-1(V(f_i)^(o r)) = union over tau of tau V(f_i).
SubspaceSet pullback_decomposition(const std::vector<MPoly>& forms, unsigned r, const Budget& budget = {});

struct PowerBasisVerdict {
  bool is_power_basis = false;
  // Components of the preimage not contained in any tau X (maximal ones).
  SubspaceSet witnesses;
  // Point on witnesses.front() outside every tau X, and its image under phi_r.
  std::optional<std::vector<Cyc>> witness_point;
  std::optional<std::vector<Cyc>> witness_image;
};

// X = V(generators). Candidates must be linear and lie in the span of the
// generators.
PowerBasisVerdict is_power_basis_linear(const std::vector<MPoly>& generators,
                                        const std::vector<MPoly>& candidates, unsigned r,
                                        const Budget& budget = {});

// Candidates may be any forms vanishing on X. Linear candidates drive the
// decomposition; each surviving bad component must be a point or a line, on
// which the remaining candidates are tested exactly through f^(o r) o phi_r.
PowerBasisVerdict is_power_basis_mixed(const std::vector<MPoly>& generators,
                                       const std::vector<MPoly>& candidates, unsigned r,
                                       const Budget& budget = {});

// (k-1) r^n + 1 combinations sum_j a_i^j g_j with Vandermonde nodes a_i = i.
std::vector<MPoly> construct_power_basis(const std::vector<MPoly>& generators, unsigned r,
                                         const Budget& budget = {});

}  // namespace cwp
