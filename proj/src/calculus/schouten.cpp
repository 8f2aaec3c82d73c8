#include "foliaquant/schouten.hpp"

namespace fq {

namespace {

// Right derivative of a multivector, viewed as a polynomial in odd variables
// xi_a, with respect to xi_a.
MultivectorField right_derivative(const MultivectorField& p, std::size_t a) {
  MultivectorField r(p.chart(), p.degree() - 1);
  const std::size_t deg = p.degree();
  for (const auto& [idx, c] : p.components()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] != a) continue;
      IndexTuple rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      // Move xi_a past the deg - 1 - k variables on its right.
      r.add(std::move(rest), (deg - 1 - k) % 2 == 0 ? c : -c);
    }
  }
  return r;
}

MultivectorField half_bracket(const MultivectorField& p, const MultivectorField& q) {
  MultivectorField r(p.chart(), p.degree() + q.degree() - 1);
  if (p.degree() == 0) return r;
  const auto& names = p.chart()->all();
  for (std::size_t a = 0; a < names.size(); ++a) {
    MultivectorField dp = right_derivative(p, a);
    if (dp.is_structurally_zero()) continue;
    MultivectorField dq = partial(q, names[a]);
    if (dq.is_structurally_zero()) continue;
    r += wedge(dp, dq);
  }
  return r;
}

}  // namespace

int schouten_convention_sign(std::size_t p) { return (p + 1) % 2 == 0 ? 1 : -1; }

MultivectorField schouten_bracket(const MultivectorField& p, const MultivectorField& q) {
  if (!(*p.chart() == *q.chart())) throw DomainError("bracket of fields on different charts");
  const std::size_t pd = p.degree();
  const std::size_t qd = q.degree();
  if (pd + qd == 0) return MultivectorField(p.chart(), 0);
  MultivectorField r = half_bracket(p, q);
  MultivectorField s = half_bracket(q, p);
  // (p-1)(q-1) parity, with p or q possibly zero.
  bool odd = pd % 2 == 0 && qd % 2 == 0;
  r = odd ? r + s : r - s;
  return schouten_convention_sign(pd) > 0 ? r : -r;
}

MultivectorField lie_bracket(const MultivectorField& x, const MultivectorField& y) {
  if (x.degree() != 1 || y.degree() != 1) throw DomainError("Lie bracket needs vector fields");
  return schouten_bracket(x, y);
}

MultivectorField contravariant_d(const MultivectorField& v, const MultivectorField& w) {
  if (w.degree() != 2) throw DomainError("contravariant differential needs a bivector");
  return -schouten_bracket(w, v);
}

}  // namespace fq
