#pragma once

#include "fitshift/group_ring.hpp"
#include "fitshift/linalg.hpp"
#include "fitshift/ring_hom.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace fitshift {

/// Ideal of a truncated group ring, presented by generators.
///
/// The canonical form is the Howell form of the Z/p^k-span of
/// {g * b : g generator, b basis monomial}.  It is computed once, on first
/// use, and shared between copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<RingElement> generators);

  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {ring->one()}); }
  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal principal(const RingElement& g) { return Ideal(g.ring(), {g}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<RingElement>& generators() const { return gens_; }

  const CoeffMatrix& canonical() const;
  bool contains(const RingElement& x) const;
  bool is_zero() const { return canonical().rows.empty(); }
  bool is_unit() const { return contains(ring_->one()); }
  /// log_p of the cardinality of I.
  unsigned length() const;

  /// A short deterministic generating set, read off a Howell form taken in
  /// the tau/T basis with low-degree monomials last.
  const std::vector<RingElement>& display_generators() const;
  /// Rows of that tau/T-basis Howell form, lowest degree first.
  std::vector<RingElement> tau_howell_rows() const;

 private:
  struct Cache {
    std::once_flag canon_once;
    std::optional<CoeffMatrix> canon;
    std::once_flag display_once;
    std::vector<RingElement> display;
  };

  RingPtr ring_;
  std::vector<RingElement> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);
Ideal ideal_mul(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_pow(const Ideal& a, unsigned e);
/// Image ideal generated by h(g) for the generators g.
Ideal ideal_image(const RingHom& h, const Ideal& a);
/// Generators reduced to a lower precision (k', N').
Ideal ideal_reduced(const Ideal& a, const RingPtr& target);
Ideal ideal_scaled(const Ideal& a, const RingElement& f);

enum class NzdStatus { certified, assumed };
enum class NzdVerdict { certified, inconclusive };

/// Sufficient test that f is a non-zero-divisor of the untruncated ring:
/// for every character chi some T-coefficient of chi(f) has nonzero norm
/// mod p^k.
NzdVerdict nzd_certificate(const RingElement& f);

/// numerator / denominator inside the total ring of fractions.
class FractionalIdeal {
 public:
  /// Throws Unsupported when the denominator is not certified and assume is false.
  FractionalIdeal(Ideal numerator, RingElement denominator, bool assume_nzd = false);

  static FractionalIdeal integral(Ideal numerator) {
    RingPtr r = numerator.ring();
    return FractionalIdeal(std::move(numerator), r->one());
  }

  const Ideal& numerator() const { return num_; }
  const RingElement& denominator() const { return den_; }
  NzdStatus nzd_status() const { return status_; }
  const RingPtr& ring() const { return num_.ring(); }

 private:
  Ideal num_;
  RingElement den_;
  NzdStatus status_;
};

FractionalIdeal frac_mul(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal frac_sum(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal frac_image(const RingHom& h, const FractionalIdeal& a, bool assume_nzd = false);

struct FracVerdict {
  bool equal = false;
  /// T-precision up to which an equal verdict is certified (N - degT f - degT g).
  int certified_t_precision = 0;
  unsigned k = 0;

  explicit operator bool() const { return equal; }
};

FracVerdict frac_equal(const FractionalIdeal& x, const FractionalIdeal& y);

}  // namespace fitshift
