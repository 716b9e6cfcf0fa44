#pragma once

#include <map>
#include <string>
#include <vector>

#include "cwpower/error.hpp"
#include "cwpower/linalg.hpp"
#include "cwpower/matroid.hpp"
#include "cwpower/mpoly.hpp"

namespace cwp {

// Rows l_0..l_n of an embedding P^k -> P^n, as linear forms on W. Entries may
// be cyclotomic.
class LinearForms {
 public:
  explicit LinearForms(CycMatrix rows);
  LinearForms(const LinearSpaceEmbedding& l);  // NOLINT(google-explicit-constructor)

  const CycMatrix& rows() const { return rows_; }
  unsigned n() const { return static_cast<unsigned>(rows_.rows()) - 1; }
  unsigned k() const { return static_cast<unsigned>(rows_.cols()) - 1; }
  // l_i as a linear polynomial in k+1 variables.
  MPoly form(std::size_t i) const;

 private:
  CycMatrix rows_;
};

// Distinct projective points of P(W*) given by the nonzero rows, each scaled
// so that its first nonzero coordinate is 1. Spans P^k.
class PointConfig {
 public:
  explicit PointConfig(const std::vector<std::vector<Cyc>>& points);
  static PointConfig from_forms(const LinearForms& l);

  unsigned k() const { return k_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::vector<Cyc>>& points() const { return points_; }

 private:
  unsigned k_ = 0;
  std::vector<std::vector<Cyc>> points_;
};

// Monomials of degree d in nvars variables, ascending grlex.
std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned d);

// Basis of I(Z)_d in k+1 variables.
std::vector<MPoly> vanishing_forms_on_config(const PointConfig& z, unsigned d);

// Basis of all degree-d forms q in n+1 variables with q(l_0^r, ..., l_n^r) = 0.
std::vector<MPoly> vanishing_forms_on_power(const LinearForms& l, unsigned r, unsigned d,
                                            const Budget& budget = {});
// Degree-one piece of the above.
std::vector<MPoly> linear_part(const LinearForms& l, unsigned r, const Budget& budget = {});

struct GeneratorProfile {
  unsigned dmax = 0;
  // counts[d] for 1 <= d <= dmax; counts[0] is unused.
  std::vector<std::size_t> counts;
  // Generators of degree > dmax are not ruled out.
  bool certified_beyond_dmax = false;

  std::size_t at(unsigned d) const { return d < counts.size() ? counts[d] : 0; }
  std::map<unsigned, std::size_t> nonzero() const;
};

GeneratorProfile minimal_generator_profile(const LinearForms& l, unsigned r, unsigned dmax = 4,
                                           const Budget& budget = {});

enum class LineKind { Line, SmoothConic };
enum class PlaneCase { I, IIa, IIb, IIIa, IIIb, IIIc };

std::string to_string(LineKind kind);
std::string to_string(PlaneCase c);

LineKind classify_line(const LinearForms& l);

struct PlaneClassification {
  PlaneCase label;
  std::size_t num_points;
  // dim I(Z)_2.
  std::size_t conics;
  // Rank of the symmetric matrix of the unique conic when conics == 1.
  std::size_t conic_rank = 0;
};

PlaneClassification classify_plane(const LinearForms& l);

}  // namespace cwp
