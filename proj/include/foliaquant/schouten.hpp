#pragma once

#include "foliaquant/forms.hpp"

namespace fq {

/// Schouten-Nijenhuis bracket of multivector fields, degree p + q - 1.
///
/// Computed from the superfunction formula with right derivatives in the odd
/// variables and then multiplied by (-1)^(p-1). With that sign
///   [X, f] = X(f),  [X, Y] = Lie bracket,  [P, Q] = (-1)^(pq) [Q, P],
/// and for a bivector w, [w, f] = w(df, .). The last property is what makes
/// the contravariant differential -[w, .] intertwine with the leafwise
/// differential through the sharp map of the symplectic form; the model
/// loader re-checks that on every chart it sees.
MultivectorField schouten_bracket(const MultivectorField& p, const MultivectorField& q);

/// Lie bracket of vector fields.
MultivectorField lie_bracket(const MultivectorField& x, const MultivectorField& y);

/// The contravariant differential: degree r -> r + 1, -[w, .].
MultivectorField contravariant_d(const MultivectorField& v, const MultivectorField& w);

/// Sign convention of schouten_bracket relative to the superfunction formula.
int schouten_convention_sign(std::size_t p);

}  // namespace fq
