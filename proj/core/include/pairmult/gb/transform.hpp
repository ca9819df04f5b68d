#pragma once

#include <span>

#include "pairmult/gb/module.hpp"

namespace pairmult {

/// Fiber of a family over the base point `params`, re-centered at `point`:
/// the returned context has only the space variables, the quotient is
/// specialized and translated, and the given order is used.
Context fiber_context(const Context& total, std::span<const Scalar> params,
                      std::span<const Scalar> point, MonomialOrder order);

/// Substitutes params -> values and space variable z_i -> z_i + point_i.
Polynomial specialize(const Polynomial& f, const Context& total, const Context& fiber,
                      std::span<const Scalar> params, std::span<const Scalar> point);
Submodule specialize(const Submodule& s, const Context& fiber, std::span<const Scalar> params,
                     std::span<const Scalar> point);

/// Same variables, translated so that `point` (one value per variable) moves
/// to the origin.
Polynomial translate(const Polynomial& f, std::span<const Scalar> point);
Submodule translate(const Submodule& s, const Context& target, std::span<const Scalar> point);

}  // namespace pairmult
