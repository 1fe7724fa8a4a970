#include "fitshift/fitting.hpp"

#include "fitshift/error.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_map>

namespace fitshift {

namespace {

using Table = std::unordered_map<std::uint64_t, RingElement>;

class MinorWalker {
 public:
  MinorWalker(const RingMatrix& h) : h_(h), a_(h.rows()), b_(h.cols()) {}

  // Extends the table of t-column minors by column c.
  Table extend(const Table& prev, std::size_t t, std::size_t c) const {
    Table next;
    for (const auto& [mask, minor] : prev) {
      std::size_t below = 0;  // rows of mask with index < r
      for (std::size_t r = 0; r < a_; ++r) {
        const std::uint64_t bit = std::uint64_t{1} << r;
        if (mask & bit) {
          ++below;
          continue;
        }
        const RingElement& x = h_.at(r, c);
        if (x.is_zero()) continue;
        // r sits at position `below` of mask | bit; last column index is t
        RingElement term = x * minor;
        if (term.is_zero()) continue;
        auto [it, fresh] = next.try_emplace(mask | bit, h_.ring()->zero());
        if ((below + t) % 2 == 0)
          it->second += term;
        else
          it->second -= term;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    return next;
  }

  void walk(const Table& table, std::size_t t, std::size_t next_col, std::vector<RingElement>& out) const {
    if (table.empty()) return;
    if (t == a_) {
      out.push_back(table.begin()->second);
      return;
    }
    for (std::size_t c = next_col; c + (a_ - t) <= b_; ++c) walk(extend(table, t, c), t + 1, c + 1, out);
  }

  Table root() const {
    Table t;
    t.emplace(0, h_.ring()->one());
    return t;
  }

 private:
  const RingMatrix& h_;
  std::size_t a_, b_;
};

void dedupe(std::vector<RingElement>& v) {
  std::sort(v.begin(), v.end(), [](const RingElement& x, const RingElement& y) { return x.coeffs() < y.coeffs(); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<RingElement> maximal_minors(const RingMatrix& h, unsigned jobs) {
  const std::size_t a = h.rows(), b = h.cols();
  if (a == 0) return {h.ring()->one()};
  if (b < a) return {};
  if (a > 63) throw Unsupported("presentations with more than 63 generators are not supported");

  MinorWalker w(h);
  const Table root = w.root();
  std::vector<RingElement> out;
  const std::size_t first_choices = b - a + 1;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(first_choices)));
  if (jobs == 1) {
    w.walk(root, 0, 0, out);
  } else {
    std::vector<std::vector<RingElement>> parts(first_choices);
    std::vector<std::thread> pool;
    for (unsigned tid = 0; tid < jobs; ++tid)
      pool.emplace_back([&, tid] {
        for (std::size_t c = tid; c < first_choices; c += jobs) w.walk(w.extend(root, 0, c), 1, c + 1, parts[c]);
      });
    for (auto& th : pool) th.join();
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  }
  dedupe(out);
  return out;
}

Ideal fitting_ideal(const RingMatrix& h, unsigned jobs) { return Ideal(h.ring(), maximal_minors(h, jobs)); }

Ideal fitting_ideal(const PresentedModule& m, unsigned jobs) { return fitting_ideal(m.presentation, jobs); }

PresentedModule lift_presentation(const PresentedModule& m, const RingHom& quotient) {
  if (quotient.kind() != RingHom::Kind::quotient) throw OutOfRange("lift_presentation needs a quotient map");
  if (!quotient.target()->compatible(*m.ring())) throw SpecMismatch("presentation does not live on the quotient spec");
  const RingPtr& big = quotient.source();
  const RingMatrix& h = m.presentation;
  RingMatrix lifted(big, h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) lifted.at(i, j) = quotient.section(h.at(i, j));
  for (std::size_t i : quotient.killed_deltas())
    lifted = hconcat(lifted, RingMatrix::scalar_identity(big->tau(i), h.rows()));
  for (std::size_t j : quotient.killed_ts())
    lifted = hconcat(lifted, RingMatrix::scalar_identity(big->t(j), h.rows()));
  PresentedModule out{std::move(lifted), std::nullopt};
  if (m.annihilator_witness) out.annihilator_witness = quotient.section(*m.annihilator_witness);
  return out;
}

PresentedModule transpose_dual(const PresentedModule& m) {
  if (m.presentation.rows() != m.presentation.cols()) throw OutOfRange("transpose_dual needs a square presentation");
  return PresentedModule{m.presentation.transpose(), m.annihilator_witness};
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
  PresentedModule out{block_diag(a.presentation, b.presentation), std::nullopt};
  if (a.annihilator_witness && b.annihilator_witness)
    out.annihilator_witness = *a.annihilator_witness * *b.annihilator_witness;
  return out;
}

RingMatrix restrict_scalars(const RingMatrix& h) {
  const Ring& R = *h.ring();
  const RingPtr lambda = R.t_part();
  const std::size_t G = R.group_size(), ts = R.t_size();
  RingMatrix out(lambda, h.rows() * G, h.cols() * G);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) {
      const auto& c = h.at(i, j).coeffs();
      for (std::size_t g = 0; g < G; ++g) {
        std::vector<u64> part(c.begin() + g * ts, c.begin() + (g + 1) * ts);
        if (std::all_of(part.begin(), part.end(), [](u64 x) { return x == 0; })) continue;
        RingElement xg(lambda, std::move(part));
        for (std::size_t g2 = 0; g2 < G; ++g2) out.at(i * G + R.group_mul(g, g2), j * G + g2) = xg;
      }
    }
  return out;
}

bool four_term_identity(const RingMatrix& h, const RingElement& f) {
  const std::size_t a = h.rows(), b = h.cols();
  const Ideal lhs = ideal_scaled(fitting_ideal(hconcat(h.transpose(), RingMatrix::scalar_identity(f, b))), f.pow(a));
  const Ideal rhs = ideal_scaled(fitting_ideal(hconcat(h, RingMatrix::scalar_identity(f, a))), f.pow(b));
  return ideal_equal(lhs, rhs);
}

}  // namespace fitshift
