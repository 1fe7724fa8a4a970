#pragma once

#include "fitshift/ideal.hpp"
#include "fitshift/ring_matrix.hpp"

#include <optional>
#include <vector>

namespace fitshift {

/// coker(h : R^b -> R^a) for an a x b presentation h.
struct PresentedModule {
  RingMatrix presentation;
  std::optional<RingElement> annihilator_witness;

  const RingPtr& ring() const { return presentation.ring(); }
  std::size_t num_generators() const { return presentation.rows(); }
  std::size_t num_relations() const { return presentation.cols(); }
};

/// All nonzero a x a minors of h (a = rows), duplicates removed.
///
/// Columns are chosen depth-first; at each depth the minors on every row
/// subset of the chosen columns are kept (Laplace expansion along the last
/// column), so prefixes are shared between column combinations.  A prefix
/// whose minors all vanish is pruned.  jobs > 1 splits the first column
/// choice across threads.
std::vector<RingElement> maximal_minors(const RingMatrix& h, unsigned jobs = 1);

Ideal fitting_ideal(const RingMatrix& h, unsigned jobs = 1);
Ideal fitting_ideal(const PresentedModule& m, unsigned jobs = 1);

/// Lifts a presentation over quotient.target() to quotient.source(): entries
/// are lifted coefficient-wise and f * identity is appended for each killed
/// relation f (delta_i - 1 for killed deltas, then T_j for killed T's).
PresentedModule lift_presentation(const PresentedModule& m, const RingHom& quotient);

/// Presentation h^T of the dual of a module with square presentation h.
PresentedModule transpose_dual(const PresentedModule& m);

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);

/// The same presentation read over the coefficient ring t_part() of R,
/// using the basis of group elements: each entry x becomes the |Delta| x |Delta|
/// block of multiplication by x.
RingMatrix restrict_scalars(const RingMatrix& h);

/// f^a Fitt(h^T | f 1_b) == f^b Fitt(h | f 1_a) for an a x b matrix h.
bool four_term_identity(const RingMatrix& h, const RingElement& f);

}  // namespace fitshift
