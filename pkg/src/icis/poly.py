"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent tuples to nonzero Fractions over a
fixed ordered variable list (the ring).  All arithmetic is exact; no
floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import inf

from .errors import RingMismatchError, UnknownVariableError, ZeroInputError
from .orders import grevlex


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms=None):
        self.ring = tuple(ring)
        clean = {}
        if terms:
            n = len(self.ring)
            for exps, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for ring {self.ring}")
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls(ring)

    @classmethod
    def constant(cls, ring, c):
        ring = tuple(ring)
        return cls(ring, {(0,) * len(ring): Fraction(c)})

    @classmethod
    def variable(cls, ring, name):
        ring = tuple(ring)
        if name not in ring:
            raise UnknownVariableError(f"{name!r} not in ring {ring}")
        exps = tuple(1 if v == name else 0 for v in ring)
        return cls(ring, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, ring, exps, coeff=1):
        return cls(ring, {tuple(exps): Fraction(coeff)})

    # -- predicates / accessors ---------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self):
        zero = (0,) * len(self.ring)
        return self.terms.get(zero, Fraction(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def variables_used(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(self.ring[i])
        return used

    def leading(self, order):
        """(exponent tuple, coefficient) of the largest term under order."""
        if not self.terms:
            raise ZeroInputError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    # -- equality ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return self.is_zero()
            return self == Polynomial.constant(self.ring, other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic ----------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.ring, other)
        self._check_ring(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Polynomial(self.ring, terms)

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.ring, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial(self.ring, {e: k * c for e, k in self.terms.items()})
        self._check_ring(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__
    __radd__ = __add__

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus and substitution --------------------------------------

    def diff(self, var):
        if var not in self.ring:
            raise UnknownVariableError(f"{var!r} not in ring {self.ring}")
        i = self.ring.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            new = list(e)
            new[i] -= 1
            terms[tuple(new)] = c * e[i]
        return Polynomial(self.ring, terms)

    def subs(self, bindings, target_ring=None):
        """Substitute polynomials (or scalars) for variables.

        Unbound variables must exist in the target ring and map to
        themselves.  The result lives in ``target_ring`` (defaults to the
        ring of the first polynomial image, else this ring).
        """
        images = {}
        for name, val in bindings.items():
            if name not in self.ring:
                raise UnknownVariableError(f"{name!r} not in ring {self.ring}")
            images[name] = val
        if target_ring is None:
            for val in images.values():
                if isinstance(val, Polynomial):
                    target_ring = val.ring
                    break
            else:
                target_ring = self.ring
        target_ring = tuple(target_ring)
        for name, val in images.items():
            if isinstance(val, Polynomial):
                if val.ring != target_ring:
                    raise RingMismatchError(
                        f"image of {name!r} lives in {val.ring}, expected {target_ring}"
                    )
            else:
                images[name] = Polynomial.constant(target_ring, val)
        for name in self.ring:
            if name not in images:
                if name not in target_ring:
                    raise UnknownVariableError(
                        f"unbound variable {name!r} missing from target ring"
                    )
                images[name] = Polynomial.variable(target_ring, name)
        result = Polynomial.zero(target_ring)
        for e, c in self.terms.items():
            term = Polynomial.constant(target_ring, c)
            for i, k in enumerate(e):
                if k:
                    term = term * images[self.ring[i]] ** k
            result = result + term
        return result

    def eval(self, point):
        """Evaluate at a rational point given as {var: scalar}."""
        val = self.subs({v: Fraction(point.get(v, 0)) for v in self.ring},
                        target_ring=self.ring)
        return val.constant_term()

    def in_ring(self, new_ring):
        """Re-express over another ring containing all used variables."""
        new_ring = tuple(new_ring)
        pos = {}
        for v in self.variables_used():
            if v not in new_ring:
                raise UnknownVariableError(f"{v!r} not in target ring {new_ring}")
        index = {v: i for i, v in enumerate(new_ring)}
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(new_ring)
            for i, k in enumerate(e):
                if k:
                    new[index[self.ring[i]]] = k
            terms[tuple(new)] = c
        return Polynomial(new_ring, terms)

    # -- printing --------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r}, ring={self.ring})"

    def __str__(self):
        return format_poly(self)


def format_poly(f):
    """Deterministic text form, terms in descending grevlex order."""
    if f.is_zero():
        return "0"
    order = grevlex(f.ring)
    parts = []
    for e in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[e]
        factors = []
        for name, k in zip(f.ring, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        mono = "*".join(factors)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- univariate / graded helpers ------------------------------------------


def order_of_vanishing(f):
    """Least exponent with nonzero coefficient of a univariate polynomial;
    +inf for the zero polynomial."""
    used = f.variables_used()
    if len(used) > 1:
        raise UnknownVariableError(f"polynomial is not univariate: uses {sorted(used)}")
    if f.is_zero():
        return inf
    return min(sum(e) for e in f.terms)


def lowest_degree_form(f):
    """Homogeneous part of minimal total degree; its degree is the
    multiplicity of the hypersurface at the origin."""
    if f.is_zero():
        raise ZeroInputError("lowest_degree_form of 0")
    d = min(sum(e) for e in f.terms)
    return Polynomial(f.ring, {e: c for e, c in f.terms.items() if sum(e) == d})


def divexact(f, g):
    """Exact division f/g; raises if g does not divide f."""
    if g.is_zero():
        raise ZeroInputError("division by zero polynomial")
    if f.is_zero():
        return f
    order = grevlex(f.ring)
    lm_g, lc_g = g.leading(order)
    q = Polynomial.zero(f.ring)
    r = f
    while not r.is_zero():
        lm_r, lc_r = r.leading(order)
        quot = tuple(a - b for a, b in zip(lm_r, lm_g))
        if any(e < 0 for e in quot):
            raise ValueError("inexact division")
        t = Polynomial.monomial(f.ring, quot, lc_r / lc_g)
        q = q + t
        r = r - t * g
    return q


def _univariate_in(f):
    used = f.variables_used()
    if len(used) == 1:
        return next(iter(used))
    return None


def _gcd_univariate(f, g, var):
    i = f.ring.index(var)

    def norm(p):
        if p.is_zero():
            return p
        _, lc = p.leading(grevlex(p.ring))
        return p * (1 / lc)

    a, b = f, g
    while not b.is_zero():
        a, b = b, _poly_rem_univariate(a, b, i)
    return norm(a)


def _poly_rem_univariate(a, b, i):
    ring = a.ring
    order = grevlex(ring)
    lm_b, lc_b = b.leading(order)
    r = a
    while not r.is_zero():
        lm_r, lc_r = r.leading(order)
        if lm_r[i] < lm_b[i]:
            break
        quot = tuple(x - y for x, y in zip(lm_r, lm_b))
        r = r - Polynomial.monomial(ring, quot, lc_r / lc_b) * b
    return r


def gcd(f, g, step_budget=10**6):
    """Multivariate gcd over the rationals.

    Univariate inputs use the Euclidean algorithm; the general case goes
    through lcm-by-elimination (an ideal intersection with one tag
    variable), then exact division of f*g by the lcm.
    """
    if f.ring != g.ring:
        raise RingMismatchError(f"{f.ring} vs {g.ring}")
    if f.is_zero():
        return _monic(g)
    if g.is_zero():
        return _monic(f)
    if f.is_constant() or g.is_constant():
        return Polynomial.constant(f.ring, 1)
    uf, ug = _univariate_in(f), _univariate_in(g)
    if uf is not None and uf == ug:
        return _gcd_univariate(f, g, uf)

    from . import basis as _basis
    from .orders import elimination_order

    tag = "_w"
    while tag in f.ring:
        tag += "_"
    big = (tag,) + f.ring
    w = Polynomial.variable(big, tag)
    one = Polynomial.constant(big, 1)
    gens = [w * f.in_ring(big), (one - w) * g.in_ring(big)]
    order = elimination_order(big, [tag])
    sb = _basis.complete_basis(gens, order, step_budget)
    candidates = [p for p in sb.generators if tag not in p.variables_used()]
    if not candidates:
        raise ValueError("lcm elimination returned no generator")
    lcm = min(candidates, key=lambda p: len(p.terms))
    lcm = lcm.in_ring(f.ring)
    return _monic(divexact(f * g, lcm))


def _monic(f):
    if f.is_zero():
        return f
    _, lc = f.leading(grevlex(f.ring))
    return f * (1 / lc)


def squarefree_part(f, step_budget=10**6):
    """Generator of the radical of <f>: f divided by gcd(f, all partials),
    leading coefficient normalized to 1 under grevlex.  Valid over a
    field of characteristic zero."""
    if f.is_zero():
        raise ZeroInputError("squarefree_part of 0")
    g = f
    for v in sorted(f.variables_used()):
        d = f.diff(v)
        if not d.is_zero():
            g = gcd(g, d, step_budget)
    return _monic(divexact(f, g))
