#include "fitshift/complexes.hpp"

#include "fitshift/error.hpp"

#include <map>
#include <numeric>

namespace fitshift {

const RingMatrix& ChainComplex::d(std::size_t j) const {
  if (j == 0 || j > boundaries.size()) throw OutOfRange("boundary index out of range");
  return boundaries[j - 1];
}

bool ChainComplex::is_complex() const {
  for (std::size_t j = 2; j <= boundaries.size(); ++j)
    if (!(d(j - 1) * d(j)).is_zero()) return false;
  return true;
}

ChainComplex cyclic_complex(const RingPtr& ring, std::size_t i, std::size_t length, unsigned u) {
  if (i >= ring->s()) throw OutOfRange("cyclic factor index out of range");
  if (length == 0) throw OutOfRange("complex length must be positive");
  const unsigned m = ring->spec().orders[i];
  if (std::gcd(u, m) != 1) throw OutOfRange("generator exponent must be prime to the factor order");
  const std::size_t idx[] = {i};
  const RingElement tau = ring->delta(i).pow(u) - ring->one();
  const RingElement norm = ring->norm_element(idx);

  ChainComplex c;
  c.ring = ring;
  c.ranks.assign(length + 1, 1);
  for (std::size_t j = 1; j <= length; ++j)
    c.boundaries.push_back(RingMatrix(ring, 1, 1, {j % 2 == 1 ? tau : norm}));
  for (std::size_t j = 0; j <= length; ++j) c.degree_labels.push_back({{static_cast<unsigned>(j)}});
  return c;
}

ChainComplex t_complex(const RingPtr& ring, std::size_t j) {
  if (j >= ring->d()) throw OutOfRange("T variable index out of range");
  ChainComplex c;
  c.ring = ring;
  c.ranks = {1, 1};
  c.boundaries.push_back(RingMatrix(ring, 1, 1, {ring->t(j)}));
  c.degree_labels = {{{0}}, {{1}}};
  return c;
}

namespace {

struct TensorBasis {
  // per element: for each factor (degree, index within that degree)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> elems;
  std::map<std::vector<std::pair<std::size_t, std::size_t>>, std::size_t> position;
};

std::size_t factor_rank(const ChainComplex& c, std::size_t deg) {
  return deg < c.ranks.size() ? c.ranks[deg] : 0;
}

void enumerate(const std::vector<ChainComplex>& fs, std::size_t f, std::size_t remaining,
               std::vector<std::pair<std::size_t, std::size_t>>& cur, TensorBasis& out) {
  if (f == fs.size()) {
    if (remaining == 0) {
      out.position.emplace(cur, out.elems.size());
      out.elems.push_back(cur);
    }
    return;
  }
  for (std::size_t deg = 0; deg <= remaining; ++deg)
    for (std::size_t e = 0; e < factor_rank(fs[f], deg); ++e) {
      cur.emplace_back(deg, e);
      enumerate(fs, f + 1, remaining - deg, cur, out);
      cur.pop_back();
    }
}

}  // namespace

ChainComplex tensor(const std::vector<ChainComplex>& factors, std::size_t length) {
  if (factors.empty()) throw OutOfRange("tensor of an empty list");
  const RingPtr& ring = factors.front().ring;
  for (const auto& c : factors)
    if (!ring->compatible(*c.ring)) throw SpecMismatch("tensor factors live on different specs");

  std::vector<TensorBasis> bases(length + 1);
  for (std::size_t n = 0; n <= length; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> cur;
    enumerate(factors, 0, n, cur, bases[n]);
  }

  ChainComplex out;
  out.ring = ring;
  for (std::size_t n = 0; n <= length; ++n) {
    out.ranks.push_back(bases[n].elems.size());
    std::vector<std::vector<unsigned>> labels;
    for (const auto& el : bases[n].elems) {
      std::vector<unsigned> lab;
      for (const auto& [deg, e] : el) lab.push_back(static_cast<unsigned>(deg));
      labels.push_back(std::move(lab));
    }
    out.degree_labels.push_back(std::move(labels));
  }

  for (std::size_t n = 1; n <= length; ++n) {
    RingMatrix dn(ring, out.ranks[n - 1], out.ranks[n]);
    for (std::size_t col = 0; col < bases[n].elems.size(); ++col) {
      const auto& el = bases[n].elems[col];
      std::size_t before = 0;  // n_1 + ... + n_{f-1}
      for (std::size_t f = 0; f < factors.size(); ++f) {
        const auto [deg, e] = el[f];
        if (deg >= 1 && deg <= factors[f].length()) {
          const RingMatrix& df = factors[f].d(deg);
          auto target = el;
          for (std::size_t i = 0; i < df.rows(); ++i) {
            const RingElement& x = df.at(i, e);
            if (x.is_zero()) continue;
            target[f] = {deg - 1, i};
            const std::size_t row = bases[n - 1].position.at(target);
            if (before % 2 == 0)
              dn.at(row, col) += x;
            else
              dn.at(row, col) -= x;
          }
        }
        before += deg;
      }
    }
    out.boundaries.push_back(std::move(dn));
  }
  return out;
}

}  // namespace fitshift
