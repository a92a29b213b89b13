"""Invariants of a single singularity germ: Milnor numbers of
hypersurfaces, of complete intersections (telescoped colength chain),
and of functions on them; discriminants, multiplicity and the
generic-line test."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import inf

from . import basis as _basis
from .errors import (
    GenericityError,
    NonIsolatedError,
    UnsupportedInputError,
    ZeroInputError,
)
from .ideals import (
    IdealPresentation,
    elimination_ideal,
    jacobian_matrix,
    maximal_minors,
)
from .orders import grevlex, negdegrevlex
from .poly import (
    Polynomial,
    lowest_degree_form,
    order_of_vanishing,
    squarefree_part,
)

MAX_RECOMBINATION_RETRIES = 12


@dataclass
class IcisPresentation:
    """Germ (X, 0) in (C^n, 0) cut out by p equations, singular only at
    the origin.  The isolated-singularity certificate (finite local
    colength of the equations plus the Jacobian minors) is verified at
    construction."""

    ring: tuple
    phi: tuple
    step_budget: int = _basis.DEFAULT_BUDGET

    def __init__(self, ring, phi, step_budget=_basis.DEFAULT_BUDGET, check=True):
        self.ring = tuple(ring)
        self.phi = tuple(p.in_ring(self.ring) for p in phi)
        self.step_budget = step_budget
        n, p = len(self.ring), len(self.phi)
        if not 1 <= p <= n:
            raise ValueError(f"need 1 <= p <= n, got p={p}, n={n}")
        for f in self.phi:
            if f.constant_term() != 0:
                raise ValueError(f"{f} does not vanish at the origin")
        if check and self.singular_colength() == inf:
            raise NonIsolatedError("singular locus is not isolated at the origin")

    @property
    def dimension(self):
        return len(self.ring) - len(self.phi)

    def singular_ideal(self):
        minors = maximal_minors(jacobian_matrix(list(self.phi), list(self.ring)))
        return IdealPresentation(self.ring, list(self.phi) + minors)

    def singular_colength(self):
        return self.singular_ideal().colength(negdegrevlex(self.ring), self.step_budget)

    def contains(self, point):
        return all(p.eval(point) == 0 for p in self.phi)

    def translated(self, point):
        """Presentation of the same variety with ``point`` moved to 0."""
        shift = {
            v: Polynomial.variable(self.ring, v) + Fraction(point.get(v, 0))
            for v in self.ring
        }
        moved = [p.subs(shift, target_ring=self.ring) for p in self.phi]
        return IcisPresentation(self.ring, moved, self.step_budget, check=False)


@dataclass
class GermFunction:
    """Function germ f: (X, 0) -> (C, 0) on an ICIS."""

    f: Polynomial
    base: IcisPresentation

    def __post_init__(self):
        self.f = self.f.in_ring(self.base.ring)
        if self.f.constant_term() != 0:
            raise ValueError("function germ must vanish at the origin")

    def critical_ideal(self):
        """<phi> plus the maximal minors of the Jacobian of (f, phi)."""
        maps = [self.f] + list(self.base.phi)
        minors = maximal_minors(jacobian_matrix(maps, list(self.base.ring)))
        return IdealPresentation(self.base.ring, list(self.base.phi) + minors)


@dataclass(frozen=True)
class LineDirection:
    v: tuple

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(Fraction(c) for c in self.v))
        if all(c == 0 for c in self.v):
            raise ValueError("direction vector must be nonzero")


def hypersurface_milnor(f, step_budget=_basis.DEFAULT_BUDGET):
    """Local colength of the ideal of all partials of f."""
    if f.constant_term() != 0:
        raise ValueError("germ must vanish at the origin")
    partials = [f.diff(v) for v in f.ring]
    I = IdealPresentation(f.ring, partials)
    mu = I.colength(negdegrevlex(f.ring), step_budget)
    if mu == inf:
        raise NonIsolatedError(f"non-isolated singularity: {f}")
    return mu


def function_on_icis_milnor(g, step_budget=_basis.DEFAULT_BUDGET):
    """dim of O_n / (<phi> + J(f, phi)) in the local ring at 0."""
    mu = g.critical_ideal().colength(negdegrevlex(g.base.ring), step_budget)
    if mu == inf:
        raise NonIsolatedError("function has non-isolated singularity on the ICIS")
    return mu


def milnor_at_point(g, point, step_budget=_basis.DEFAULT_BUDGET):
    """Milnor number of g.f on V(phi) at a rational point of the variety."""
    point = {v: Fraction(c) for v, c in point.items()}
    if not g.base.contains(point):
        raise ValueError(f"point {point} is not on the variety")
    base = g.base.translated(point)
    ring = g.base.ring
    shift = {v: Polynomial.variable(ring, v) + point.get(v, Fraction(0)) for v in ring}
    f_moved = g.f.subs(shift, target_ring=ring)
    f_moved = f_moved - f_moved.constant_term()
    return function_on_icis_milnor(GermFunction(f_moved, base), step_budget)


def _recombine(phi, rng):
    """Seeded invertible upper-triangular recombination over Z."""
    p = len(phi)
    out = []
    for i in range(p):
        g = phi[i]
        for j in range(i + 1, p):
            c = rng.randint(-9, 9)
            if c:
                g = g + c * phi[j]
        out.append(g)
    return out


def icis_milnor(X, seed=0, step_budget=_basis.DEFAULT_BUDGET):
    """Milnor number of an ICIS via the telescoped colength chain:
    mu(X_{k-1}) + mu(X_k) = colength(<phi_1..phi_{k-1}> + minors of the
    Jacobian of (phi_1..phi_k)), starting from mu(C^n) = 0.

    Each truncation must have finite colength; when the given equation
    order fails, seeded random recombinations of the equations are
    tried (the chain is valid for a generic choice)."""
    rng = random.Random(seed)
    last_failure = None
    for attempt in range(MAX_RECOMBINATION_RETRIES + 1):
        phi = list(X.phi) if attempt == 0 else _recombine(list(X.phi), rng)
        try:
            return _chain_milnor(phi, X.ring, step_budget)
        except GenericityError as exc:
            last_failure = exc
    raise GenericityError(
        f"no recombination gave finite chain colengths: {last_failure}"
    )


def _chain_milnor(phi, ring, step_budget):
    mu = 0
    for k in range(1, len(phi) + 1):
        minors = maximal_minors(jacobian_matrix(phi[:k], list(ring)))
        I = IdealPresentation(ring, phi[: k - 1] + minors)
        c = I.colength(negdegrevlex(ring), step_budget)
        if c == inf:
            raise GenericityError(f"infinite colength at chain stage {k}")
        mu = c - mu
    return mu


def _target_ring(p):
    if p <= 3:
        return ("u", "v", "w")[:p]
    return tuple(f"u{i+1}" for i in range(p))


def discriminant(phis, step_budget=_basis.DEFAULT_BUDGET):
    """Reduced equation of the discriminant: image of the critical set
    of the map phi, computed by eliminating the source variables from
    the graph-plus-critical ideal."""
    phis = list(phis)
    ring = phis[0].ring
    p = len(phis)
    targets = _target_ring(p)
    big = ring + targets
    minors = maximal_minors(jacobian_matrix(phis, list(ring)))
    # a minor that is a unit at 0 makes the critical-set germ empty
    if any(m.constant_term() != 0 for m in minors):
        raise UnsupportedInputError("critical set is empty: no discriminant hypersurface")
    gens = [
        Polynomial.variable(big, u) - f.in_ring(big) for u, f in zip(targets, phis)
    ] + [m.in_ring(big) for m in minors]
    I = IdealPresentation(big, gens)
    E = elimination_ideal(I, targets, step_budget)
    gens = [g for g in E.generators if not g.is_zero()]
    if not gens:
        raise UnsupportedInputError("discriminant eliminant is zero: not a hypersurface")
    sb = _basis.complete_basis(gens, grevlex(targets), step_budget)
    if len(sb.generators) != 1:
        raise UnsupportedInputError("discriminant eliminant is not principal")
    return squarefree_part(sb.generators[0], step_budget)


def multiplicity(delta):
    """Degree of the lowest-degree homogeneous form of the discriminant
    equation at the origin."""
    if delta.is_zero():
        raise ZeroInputError("multiplicity of 0")
    if delta.constant_term() != 0:
        raise ValueError("unit input: hypersurface must pass through the origin")
    return lowest_degree_form(delta).total_degree()


def line_intersection_number(delta, L):
    """Order of vanishing of delta along the parametrized line s -> s*v;
    +inf when the line lies inside the hypersurface."""
    if delta.constant_term() != 0:
        raise ValueError("hypersurface must pass through the origin")
    if len(L.v) != len(delta.ring):
        raise ValueError("direction dimension does not match the target ring")
    s_ring = ("s",)
    s = Polynomial.variable(s_ring, "s")
    comp = delta.subs({u: c * s for u, c in zip(delta.ring, L.v)}, target_ring=s_ring)
    return order_of_vanishing(comp)


def is_generic_line(delta, L):
    """A line is generic iff it meets the hypersurface with intersection
    number equal to the multiplicity, i.e. the lowest-degree form does
    not vanish on the direction vector."""
    form = lowest_degree_form(delta)
    return form.eval(dict(zip(delta.ring, L.v))) != 0
