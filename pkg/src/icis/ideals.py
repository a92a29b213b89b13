"""Ideal-level constructions: Jacobian matrices and minors, elimination,
radical membership and distinct-point counting."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import inf

from . import basis as _basis
from .errors import NonIsolatedError, UnknownVariableError, ZeroInputError
from .orders import elimination_order, grevlex
from .poly import Polynomial, gcd as poly_gcd, divexact


@dataclass
class IdealPresentation:
    ring: tuple
    generators: tuple
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __init__(self, ring, generators):
        self.ring = tuple(ring)
        gens = []
        for g in generators:
            if g.ring != self.ring:
                g = g.in_ring(self.ring)
            if not g.is_zero():
                gens.append(g)
        self.generators = tuple(gens)
        self._cache = {}

    def basis(self, order, step_budget=_basis.DEFAULT_BUDGET):
        key = (order.kind, getattr(order, "eliminate", None))
        hit = self._cache.get(key)
        if hit is None:
            hit = _basis.complete_basis(self.generators, order, step_budget)
            self._cache[key] = hit
        return hit

    def colength(self, order, step_budget=_basis.DEFAULT_BUDGET):
        return _basis.colength(self.basis(order, step_budget))

    def plus(self, extra):
        return IdealPresentation(self.ring, list(self.generators) + list(extra))


def jacobian_matrix(maps, variables):
    """Rows indexed by maps, columns by variables; entry = d(map)/d(var)."""
    maps = list(maps)
    variables = list(variables)
    if not maps or not variables:
        raise ZeroInputError("empty maps or variables")
    ring = maps[0].ring
    for v in variables:
        if v not in ring:
            raise UnknownVariableError(f"{v!r} not in ring {ring}")
    return [[f.diff(v) for v in variables] for f in maps]


def determinant(matrix):
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return Polynomial.zero(matrix[0][0].ring)
    return total


def maximal_minors(matrix):
    """All determinants of maximal square submatrices (size = min(r, c))."""
    rows, cols = len(matrix), len(matrix[0])
    if rows > cols:
        matrix = [[matrix[i][j] for i in range(rows)] for j in range(cols)]
        rows, cols = cols, rows
    out = []
    for col_idx in combinations(range(cols), rows):
        sub = [[row[j] for j in col_idx] for row in matrix]
        out.append(determinant(sub))
    return out


def relative_jacobian_ideal(F, phis, t):
    """Ideal of maximal minors of the Jacobian of (F, phi_1..phi_p) in
    all ring variables except the deformation parameter t."""
    ring = F.ring
    if t not in ring:
        raise UnknownVariableError(f"parameter {t!r} not in ring {ring}")
    x_vars = [v for v in ring if v != t]
    maps = [F] + [p.in_ring(ring) for p in phis]
    minors = maximal_minors(jacobian_matrix(maps, x_vars))
    return IdealPresentation(ring, minors)


def elimination_ideal(I, keep, step_budget=_basis.DEFAULT_BUDGET):
    """Generators of the intersection of I with the subring in the kept
    variables, presented over the kept-variable ring."""
    keep = [v for v in I.ring if v in set(keep)]
    eliminate = [v for v in I.ring if v not in set(keep)]
    if not eliminate:
        return IdealPresentation(keep, list(I.generators))
    order = elimination_order(I.ring, eliminate)
    sb = I.basis(order, step_budget)
    kept = [
        g.in_ring(tuple(keep))
        for g in sb.generators
        if g.variables_used() <= set(keep)
    ]
    return IdealPresentation(tuple(keep), kept)


def radical_membership(f, I, step_budget=_basis.DEFAULT_BUDGET):
    """f in the radical of I, i.e. f vanishes on V(I) over the closure.

    Decided by adjoining a fresh variable z and testing whether
    1 lies in I + <1 - z*f> under a global order."""
    if f.is_zero():
        return True
    tag = "_z"
    while tag in I.ring:
        tag += "_"
    big = I.ring + (tag,)
    z = Polynomial.variable(big, tag)
    one = Polynomial.constant(big, 1)
    gens = [g.in_ring(big) for g in I.generators]
    gens.append(one - z * f.in_ring(big))
    sb = _basis.complete_basis(gens, grevlex(big), step_budget)
    return any(g.is_constant() and not g.is_zero() for g in sb.generators)


def univariate_eliminant(I, var, step_budget=_basis.DEFAULT_BUDGET):
    """Generator of the elimination ideal of I in the single variable
    ``var``; zero polynomial when the elimination ideal is trivial."""
    E = elimination_ideal(I, [var], step_budget)
    if not E.generators:
        return Polynomial.zero((var,))
    g = E.generators[0]
    for h in E.generators[1:]:
        g = poly_gcd(g, h, step_budget)
    return g


def _squarefree_univariate(g):
    d = None
    for v in g.ring:
        dv = g.diff(v)
        if not dv.is_zero():
            d = dv
    if d is None:
        return g
    return divexact(g, poly_gcd(g, d))


def distinct_point_count(I, step_budget=_basis.DEFAULT_BUDGET):
    """Number of distinct points of V(I) over the algebraic closure.

    Adjoins the squarefree part of each per-variable eliminant (the
    zero-dimensional radical over a perfect field) and takes the
    colength of the result."""
    sb = I.basis(grevlex(I.ring), step_budget)
    if not _basis.is_zero_dimensional(sb):
        raise NonIsolatedError("distinct_point_count needs a zero-dimensional ideal")
    extra = []
    for v in I.ring:
        g = univariate_eliminant(I, v, step_budget)
        if g.is_zero():
            raise NonIsolatedError(f"trivial eliminant in {v!r}")
        extra.append(_squarefree_univariate(g).in_ring(I.ring))
    rad = I.plus(extra)
    c = rad.colength(grevlex(I.ring), step_budget)
    if c == inf:
        raise NonIsolatedError("radical not zero-dimensional")
    return c
