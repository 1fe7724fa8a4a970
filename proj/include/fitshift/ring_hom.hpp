#pragma once

#include "fitshift/group_ring.hpp"

#include <vector>

namespace fitshift {

/// scalar * delta^a * prod_j (1 + T_j)^{c_j} in some target ring.
struct GroupLike {
  u64 scalar = 1;
  std::vector<unsigned> delta_exps;
  std::vector<u64> gamma_exps;

  bool operator==(const GroupLike&) const = default;
};

/// Evaluates a group-like monomial in the truncated ring.
RingElement evaluate(const Ring& ring, const GroupLike& g);

/// (1 + T_j)^c truncated at T_j^N, as an element of ring.
RingElement gamma_power(const Ring& ring, std::size_t j, u64 c);

/// Ring homomorphism determined by group-like images of the generators
/// delta_i and gamma_j = 1 + T_j.
///
/// All three kinds (quotient, twist, inclusion) are substitutions of this
/// shape, so composition is computed exactly on generator images.  apply()
/// substitutes into the stored representative; exact_t_precision() reports
/// the T-exponent bound below which the result agrees with the image of
/// every exact lift.
class RingHom {
 public:
  enum class Kind { quotient, twist, inclusion };

  /// delta_i -> 1 for i in killed_deltas, T_j -> 0 for j in killed_ts.  The
  /// target spec drops those coordinates.
  static RingHom quotient(const RingPtr& source, const std::vector<std::size_t>& killed_deltas,
                          const std::vector<std::size_t>& killed_ts);
  /// g -> rho(g) g with rho(delta_i) = delta_values[i], rho(1+T_j) = gamma_values[j].
  static RingHom twist(const RingPtr& ring, std::vector<u64> delta_values, std::vector<u64> gamma_values);
  static RingHom inclusion(const RingPtr& source, const RingPtr& target, std::vector<GroupLike> delta_images,
                           std::vector<GroupLike> gamma_images);

  Kind kind() const { return kind_; }
  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<GroupLike>& delta_images() const { return delta_images_; }
  const std::vector<GroupLike>& gamma_images() const { return gamma_images_; }

  RingElement apply(const RingElement& x) const;

  /// this o first (apply first, then this).
  RingHom after(const RingHom& first) const;
  /// Inverse of a twist.
  RingHom inverse_twist() const;
  /// Lift along a quotient map: reinserts zero exponents for the killed
  /// coordinates (a set-theoretic section, coefficient tuples unchanged).
  RingElement section(const RingElement& y) const;

  unsigned exact_t_precision() const;

  const std::vector<std::size_t>& killed_deltas() const { return killed_deltas_; }
  const std::vector<std::size_t>& killed_ts() const { return killed_ts_; }

 private:
  RingHom() = default;
  void validate() const;
  GroupLike image_of(const GroupLike& g) const;

  Kind kind_ = Kind::inclusion;
  RingPtr source_;
  RingPtr target_;
  std::vector<GroupLike> delta_images_;
  std::vector<GroupLike> gamma_images_;
  std::vector<std::size_t> killed_deltas_;
  std::vector<std::size_t> killed_ts_;
};

RingElement apply_hom(const RingHom& h, const RingElement& x);

}  // namespace fitshift
