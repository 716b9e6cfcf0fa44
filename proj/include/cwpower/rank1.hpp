#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cwpower/linalg.hpp"
#include "cwpower/mpoly.hpp"

namespace cwp {

// Symmetric (k+1) x (k+1) matrix of variables y_ij and the rank parameter s
// of I_s = diag(1, ..., 1, 0, ..., 0). Indices are 1-based.
struct SymVarIndex {
  unsigned k = 1;
  unsigned s = 2;

  SymVarIndex() = default;
  SymVarIndex(unsigned k_, unsigned s_);
  unsigned size() const { return k + 1; }
  unsigned nvars() const { return (k + 1) * (k + 2) / 2; }
  // Variable number of y_ij = y_ji, rows of the upper triangle in order.
  unsigned var(unsigned i, unsigned j) const;
  MPoly y(unsigned i, unsigned j) const;
  std::string name(unsigned index) const;
};

// y_il y_jm - y_im y_jl.
MPoly minor2(const SymVarIndex& idx, unsigned i, unsigned j, unsigned l, unsigned m);
Rational minor2(const QMatrix& a, unsigned i, unsigned j, unsigned l, unsigned m);

enum class Family { E, F, G, H1, H2 };
std::string to_string(Family f);

struct MinorRelation {
  Family family;
  std::vector<unsigned> indices;
  MPoly expansion;
};

struct RelationFamilies {
  std::vector<MinorRelation> e, f, g, h1, h2;
};

// Every admissible index tuple, zero relations and repeats up to sign
// dropped, in lexicographic order of the tuples.
RelationFamilies gens_families(const SymVarIndex& idx);

struct RelationBases {
  std::vector<MinorRelation> b_e, b_f, b_g;
};

RelationBases bases_BEFG(const SymVarIndex& idx);

struct BasisCounts {
  Integer b_e, b_f, b_g;
};

// Closed forms for |B_E|, |B_F|, |B_G|.
BasisCounts basis_count_formulas(const SymVarIndex& idx);

struct ExpectedCounts {
  Integer quadrics;
  unsigned cubics = 0;
};

ExpectedCounts expected_counts(const SymVarIndex& idx);

// Right-hand sides of the expansions of the H1 and H2 relations for
// distinct i, j, l, m <= s as combinations of E, F and G relations.
MPoly h1_reduction(const SymVarIndex& idx, unsigned i, unsigned j, unsigned l, unsigned m);
MPoly h2_reduction(const SymVarIndex& idx, unsigned i, unsigned j, unsigned l, unsigned m);

// Single relations by formula.
MPoly h1_relation(const SymVarIndex& idx, unsigned i, unsigned j, unsigned l);
MPoly h2_relation(const SymVarIndex& idx, unsigned i, unsigned j, unsigned l);

// True iff the symmetric matrix has an eigenspace of codimension <= 1. Size
// 3 evaluates E, F, H1, H2; size >= 4 the three minor relations with
// distinct indices. UnsupportedSize below 3.
bool eig_degenerate_test(const QMatrix& a);

// Q diag(lambda, ..., lambda, mu) Q^T with Q a seeded Cayley orthogonal matrix.
QMatrix cayley_degenerate_sample(unsigned size, const Rational& lambda, const Rational& mu,
                                 std::uint64_t seed);

// -4(x^2 + y^2 + z^2) I + 12 v v^T for v = (x, y, z).
QMatrix veronese_eigen_witness(const Rational& x, const Rational& y, const Rational& z);

}  // namespace cwp
