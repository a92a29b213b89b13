"""Deformation analysis: specialization, critical-locus accounting,
conservation of number, splitting detection, and the Greuel-type
condition checks with their implications.

Affine colengths stand in for Milnor-ball totals only when the
convergence certificate holds (every critical point collapses to the
origin as the parameter goes to zero); otherwise ball-dependent
verdicts come back inconclusive rather than wrong.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import inf

from . import basis as _basis
from .errors import InconclusiveError, NonIsolatedError
from .germs import GermFunction, IcisPresentation, function_on_icis_milnor, icis_milnor
from .ideals import (
    IdealPresentation,
    distinct_point_count,
    jacobian_matrix,
    maximal_minors,
    radical_membership,
    relative_jacobian_ideal,
    univariate_eliminant,
)
from .orders import grevlex, negdegrevlex
from .poly import Polynomial, order_of_vanishing

FUNCTION = "function-deformation"
SPACE = "space-deformation"

VERIFIED = "VERIFIED"
VIOLATION = "VIOLATION"
VACUOUS = "VACUOUS"
INCONCLUSIVE = "INCONCLUSIVE"
CONSISTENT = "CONSISTENT-WITH-THEOREM"

DEFAULT_SAMPLES = (Fraction(1), Fraction(1, 2))


@dataclass
class DeformationFamily:
    """F(t, x) deforming a function germ on a fixed ICIS, or Phi(t, x)
    deforming the ICIS itself; specializing at t = 0 reproduces the base."""

    ring: tuple
    param: str
    kind: str
    base: IcisPresentation
    F: Polynomial = None
    Phi: tuple = None
    step_budget: int = _basis.DEFAULT_BUDGET

    @property
    def x_ring(self):
        return tuple(v for v in self.ring if v != self.param)

    @classmethod
    def function_deformation(cls, ring, param, phi, F, step_budget=_basis.DEFAULT_BUDGET):
        ring = tuple(ring)
        if param not in ring:
            raise ValueError(f"parameter {param!r} not in ring {ring}")
        x_ring = tuple(v for v in ring if v != param)
        base = IcisPresentation(x_ring, [p.in_ring(x_ring) for p in phi], step_budget)
        F = F.in_ring(ring)
        fam = cls(ring, param, FUNCTION, base, F=F, step_budget=step_budget)
        # the base member at t = 0 must be a genuine germ
        fam.specialize(0)
        return fam

    @classmethod
    def space_deformation(cls, ring, param, Phi, step_budget=_basis.DEFAULT_BUDGET):
        ring = tuple(ring)
        if param not in ring:
            raise ValueError(f"parameter {param!r} not in ring {ring}")
        x_ring = tuple(v for v in ring if v != param)
        Phi = tuple(p.in_ring(ring) for p in Phi)
        phi0 = [p.subs({param: 0}, target_ring=x_ring) for p in Phi]
        base = IcisPresentation(x_ring, phi0, step_budget)
        return cls(ring, param, SPACE, base, Phi=Phi, step_budget=step_budget)

    def specialize(self, t0):
        """Exact substitution t -> t0."""
        t0 = Fraction(t0)
        if self.kind == FUNCTION:
            f = self.F.subs({self.param: t0}, target_ring=self.x_ring)
            return GermFunction(f, self.base)
        return [p.subs({self.param: t0}, target_ring=self.x_ring) for p in self.Phi]

    # -- parametric ideals ------------------------------------------------

    def parametric_critical_ideal(self):
        """<phi> + J(f_t, phi) in the (t, x)-ring; its zero set is
        {(t, x) : x is a critical point of f_t}."""
        if self.kind != FUNCTION:
            raise ValueError("critical ideal is defined for function deformations")
        J = relative_jacobian_ideal(self.F, list(self.base.phi), self.param)
        phi_lift = [p.in_ring(self.ring) for p in self.base.phi]
        return IdealPresentation(self.ring, phi_lift + list(J.generators))

    def relative_minors(self):
        J = relative_jacobian_ideal(self.F, list(self.base.phi), self.param)
        return list(J.generators)

    def parametric_fiber_singular_ideal(self):
        """Singular points of the fibers: adds F itself (function kind)
        or uses the deformed equations (space kind)."""
        if self.kind == FUNCTION:
            I = self.parametric_critical_ideal()
            return I.plus([self.F])
        maps = list(self.Phi)
        x_vars = list(self.x_ring)
        minors = maximal_minors(jacobian_matrix(maps, x_vars))
        return IdealPresentation(self.ring, maps + minors)


@dataclass
class CriticalLocusReport:
    t0: Fraction
    critical_ideal: IdealPresentation
    total_colength: int
    local_mu_origin: int
    distinct_points: int
    converges_to_origin: bool

    @property
    def off_origin_budget(self):
        return self.total_colength - self.local_mu_origin


@dataclass
class CurveProbe:
    """Polynomial curve s -> (t(s), x(s)) through the origin, used as a
    necessary-condition witness for the valuation inequalities."""

    components: dict

    def __post_init__(self):
        for name, comp in self.components.items():
            if comp.ring != ("s",):
                raise ValueError(f"probe component for {name!r} must be univariate in s")
            if comp.constant_term() != 0:
                raise ValueError("probe must pass through the origin at s = 0")

    def pullback(self, f):
        s_ring = ("s",)
        bindings = {
            v: self.components.get(v, Polynomial.zero(s_ring)) for v in f.ring
        }
        return f.subs(bindings, target_ring=s_ring)


@dataclass
class ProbeResult:
    probe: CurveProbe
    numerator_order: object
    denominator_order: object
    strict: bool
    weak: bool
    on_variety: bool


@dataclass
class GreuelConditionsReport:
    cond1_mu_constant: bool
    cond5_radical: bool
    cond6_variety: bool
    curve_probes: list
    implications_ok: bool
    mu_origin_base: int
    mu_origin_samples: dict
    totals: dict
    converges_to_origin: bool


@dataclass
class SplittingSample:
    t0: Fraction
    singular_count: int
    total_fiber_mu: object
    point: dict
    point_mu: object


@dataclass
class SplittingReport:
    base_fiber_mu: int
    converges_to_origin: bool
    samples: list
    verdict: str
    reason: str


def _is_pure_power(g):
    """c * x^k for some k >= 0 (a single term)."""
    return not g.is_zero() and len(g.terms) == 1


def converges_to_origin(parametric_ideal, param, x_vars, step_budget=_basis.DEFAULT_BUDGET):
    """Certificate that every point of the parametric locus collapses to
    the origin as the parameter goes to 0: for each coordinate, the
    eliminant in (t, x_i) specialized at t = 0 is a pure power of x_i."""
    from .ideals import elimination_ideal
    from .poly import gcd as poly_gcd

    for xv in x_vars:
        E = elimination_ideal(parametric_ideal, [param, xv], step_budget)
        at_zero = []
        for g in E.generators:
            g0 = g.subs({param: 0}, target_ring=(xv,))
            if not g0.is_zero():
                at_zero.append(g0)
        if not at_zero:
            return False
        g = at_zero[0]
        for h in at_zero[1:]:
            g = poly_gcd(g, h, step_budget)
        if not _is_pure_power(g):
            return False
    return True


def critical_locus_report(fam, t0, step_budget=None):
    """Exact accounting of the critical locus of the member at t0."""
    budget = step_budget or fam.step_budget
    t0 = Fraction(t0)
    germ = fam.specialize(t0)
    I = germ.critical_ideal()
    order = grevlex(fam.x_ring)
    total = I.colength(order, budget)
    if total == inf:
        raise NonIsolatedError(f"critical ideal at t={t0} is not zero-dimensional")
    local = I.colength(negdegrevlex(fam.x_ring), budget)
    distinct = distinct_point_count(I, budget) if total > 0 else 0
    conv = converges_to_origin(
        fam.parametric_critical_ideal(), fam.param, fam.x_ring, budget
    )
    return CriticalLocusReport(t0, I, total, local, distinct, conv)


def conservation_check(fam, samples=DEFAULT_SAMPLES, step_budget=None):
    """Total colength at each sampled parameter equals the Milnor number
    of the base member; requires the convergence certificate."""
    budget = step_budget or fam.step_budget
    mu0 = function_on_icis_milnor(fam.specialize(0), budget)
    reports = [critical_locus_report(fam, t0, budget) for t0 in samples]
    if not all(r.converges_to_origin for r in reports):
        raise InconclusiveError(
            "critical points do not all converge to the origin; affine totals "
            "do not represent Milnor-ball totals"
        )
    return all(r.total_colength == mu0 for r in reports)


def _rational_point_from_eliminants(I, step_budget):
    """Coordinates of the unique point of a zero-dimensional variety with
    exactly one distinct point: each squarefree eliminant is linear."""
    point = {}
    for v in I.ring:
        g = univariate_eliminant(I, v, step_budget)
        from .ideals import _squarefree_univariate

        g = _squarefree_univariate(g)
        if g.total_degree() != 1:
            return None
        # c1 * v + c0 = 0
        i = g.ring.index(v)
        c1 = c0 = Fraction(0)
        for e, c in g.terms.items():
            if e[i] == 1:
                c1 = c
            else:
                c0 = c
        point[v] = -c0 / c1
    return point


def _fiber_presentation(fam, t0):
    """Equations cutting the fiber at t0: (phi, f_t) for function
    deformations, Phi_t for space deformations."""
    if fam.kind == FUNCTION:
        germ = fam.specialize(t0)
        return list(fam.base.phi) + [germ.f]
    return fam.specialize(t0)


def _total_on_fiber(jac_gens, f, ring, step_budget):
    """Sum of local colengths of <jac_gens> over the points of the fiber
    f = 0 only: adjoin rising powers of f until the colength stabilizes,
    which kills the primary components at points off the fiber."""
    base = IdealPresentation(ring, jac_gens)
    order = grevlex(ring)
    prev = None
    power = f
    for _ in range(64):
        c = base.plus([power]).colength(order, step_budget)
        if c == inf:
            raise NonIsolatedError("fiber total is not finite")
        if c == prev:
            return c
        prev = c
        power = power * f
    raise NonIsolatedError("fiber-total power iteration did not stabilize")


def splitting_check(fam, samples=DEFAULT_SAMPLES, step_budget=None):
    """No-coalescence check: when the total fiber Milnor number stays
    equal to the base value, there must be exactly one singular point
    and it must carry the full Milnor number."""
    budget = step_budget or fam.step_budget
    x_ring = fam.x_ring
    order = grevlex(x_ring)

    base_eqs = _fiber_presentation(fam, 0)
    base_pres = IcisPresentation(x_ring, base_eqs, budget)
    base_mu = icis_milnor(base_pres, step_budget=budget)

    conv = converges_to_origin(
        fam.parametric_fiber_singular_ideal(), fam.param, x_ring, budget
    )

    results = []
    inconclusive = False
    for t0 in samples:
        t0 = Fraction(t0)
        eqs = _fiber_presentation(fam, t0)
        minors = maximal_minors(jacobian_matrix(eqs, list(x_ring)))
        sing = IdealPresentation(x_ring, list(eqs) + minors)
        c = sing.colength(order, budget)
        if c == inf:
            raise NonIsolatedError(f"fiber at t={t0} has non-isolated singularities")
        if c == 0:
            results.append(SplittingSample(t0, 0, 0, None, None))
            continue
        count = distinct_point_count(sing, budget)
        total = point = point_mu = None
        if fam.kind == SPACE and len(fam.Phi) == 1:
            # hypersurface family: affine Jacobian colength restricted
            # to the zero fiber
            phi_t = eqs[0]
            jac = [phi_t.diff(v) for v in x_ring]
            total = _total_on_fiber(jac, phi_t, x_ring, budget)
        if count == 1:
            point = _rational_point_from_eliminants(sing, budget)
            if point is not None and all(g.eval(point) == 0 for g in eqs):
                shifted = IcisPresentation(x_ring, eqs, budget).translated(point)
                point_mu = icis_milnor(
                    IcisPresentation(x_ring, shifted.phi, budget), step_budget=budget
                )
                if total is None:
                    total = point_mu
        if total is None:
            inconclusive = True
        results.append(SplittingSample(t0, count, total, point, point_mu))

    if inconclusive or not conv:
        return SplittingReport(
            base_mu, conv, results, INCONCLUSIVE,
            "fiber totals could not be certified (convergence or "
            "multi-point totals unavailable)",
        )
    hypothesis = all(r.total_fiber_mu == base_mu for r in results)
    if not hypothesis:
        return SplittingReport(
            base_mu, conv, results, VACUOUS,
            "total fiber Milnor number is not constant; the theorem's "
            "hypothesis fails",
        )
    if base_mu == 0:
        return SplittingReport(
            base_mu, conv, results, VACUOUS,
            "base fiber is smooth; the theorem concerns singular germs",
        )
    ok = all(
        r.singular_count == 1 and (r.point_mu is None or r.point_mu == base_mu)
        for r in results
    )
    if ok:
        return SplittingReport(
            base_mu, conv, results, CONSISTENT,
            "constant total Milnor number with a unique singular point "
            "carrying the full Milnor number",
        )
    return SplittingReport(
        base_mu, conv, results, VIOLATION,
        "constant total Milnor number with splitting: this contradicts the "
        "no-coalescence theorem and indicates a computation bug",
    )


def greuel_conditions(fam, probes=(), samples=DEFAULT_SAMPLES, step_budget=None):
    """Evaluate the implemented Greuel-type conditions.

    cond1: the Milnor number at the origin is constant along sampled
    parameters.  cond5: dF/dt lies in the radical of <phi> + J.  cond6:
    the zero set of <phi> + J is the parameter axis.  Curve probes give
    necessary-condition evidence for the valuation inequalities."""
    if fam.kind != FUNCTION:
        raise ValueError("Greuel conditions apply to function deformations")
    budget = step_budget or fam.step_budget
    I = fam.parametric_critical_ideal()
    minors = fam.relative_minors()

    mu0 = function_on_icis_milnor(fam.specialize(0), budget)
    sample_mu = {}
    totals = {}
    conv = None
    for t0 in samples:
        r = critical_locus_report(fam, t0, budget)
        sample_mu[r.t0] = r.local_mu_origin
        totals[r.t0] = r.total_colength
        conv = r.converges_to_origin if conv is None else (conv and r.converges_to_origin)
    cond1 = all(m == mu0 for m in sample_mu.values())

    dFdt = fam.F.diff(fam.param)
    cond5 = radical_membership(dFdt, I, budget)

    cond6 = all(
        radical_membership(Polynomial.variable(fam.ring, xv), I, budget)
        for xv in fam.x_ring
    ) and all(
        g.subs({xv: 0 for xv in fam.x_ring}, target_ring=fam.ring).is_zero()
        for g in I.generators
    )

    probe_results = []
    for probe in probes:
        on_variety = all(
            probe.pullback(p.in_ring(fam.ring)).is_zero() for p in fam.base.phi
        )
        num = order_of_vanishing(probe.pullback(dFdt))
        den = min(order_of_vanishing(probe.pullback(g)) for g in minors)
        probe_results.append(
            ProbeResult(probe, num, den, num > den, num >= den, on_variety)
        )

    return GreuelConditionsReport(
        cond1_mu_constant=cond1,
        cond5_radical=cond5,
        cond6_variety=cond6,
        curve_probes=probe_results,
        implications_ok=not (cond5 and not cond6),
        mu_origin_base=mu0,
        mu_origin_samples=sample_mu,
        totals=totals,
        converges_to_origin=conv if conv is not None else True,
    )


def radical_implies_axis_check(fam, step_budget=None):
    """If dF/dt is in the radical of <phi> + J then the zero set of J is
    the parameter axis; checked instance-wise."""
    budget = step_budget or fam.step_budget
    I = fam.parametric_critical_ideal()
    dFdt = fam.F.diff(fam.param)
    cond5 = radical_membership(dFdt, I, budget)
    if not cond5:
        return VERIFIED, {"cond5": False, "cond6": None}
    cond6 = all(
        radical_membership(Polynomial.variable(fam.ring, xv), I, budget)
        for xv in fam.x_ring
    ) and all(
        g.subs({xv: 0 for xv in fam.x_ring}, target_ring=fam.ring).is_zero()
        for g in I.generators
    )
    details = {"cond5": True, "cond6": cond6}
    if cond6:
        return VERIFIED, details
    # an apparent counterexample can only be an affine artifact unless the
    # affine locus is certified to represent the germ at the origin
    if not converges_to_origin(I, fam.param, fam.x_ring, budget):
        details["certificate"] = False
        return INCONCLUSIVE, details
    return VIOLATION, details


def zero_fiber_forces_origin_check(fam, samples=DEFAULT_SAMPLES, step_budget=None):
    """If every critical point of every member lies on its zero fiber
    (F vanishes on the critical locus), then each member's only critical
    point is the origin."""
    budget = step_budget or fam.step_budget
    I = fam.parametric_critical_ideal()
    hypothesis = radical_membership(fam.F, I, budget)
    details = {"hypothesis": hypothesis, "samples": {}}
    if not hypothesis:
        return VACUOUS, details
    conclusion = True
    for t0 in samples:
        t0 = Fraction(t0)
        germ = fam.specialize(t0)
        crit = germ.critical_ideal()
        total = crit.colength(grevlex(fam.x_ring), budget)
        if total == inf:
            raise NonIsolatedError(f"critical ideal at t={t0} is not zero-dimensional")
        if total == 0:
            details["samples"][t0] = {"count": 0, "at_origin": True}
            continue
        count = distinct_point_count(crit, budget)
        at_origin = all(
            _is_pure_power(univariate_eliminant(crit, v, budget)) for v in fam.x_ring
        )
        details["samples"][t0] = {"count": count, "at_origin": at_origin}
        conclusion = conclusion and count == 1 and at_origin
    if conclusion:
        return VERIFIED, details
    # same caveat as the implication check: an affine extra critical point
    # refutes the germ statement only under the convergence certificate
    if not converges_to_origin(I, fam.param, fam.x_ring, budget):
        details["certificate"] = False
        return INCONCLUSIVE, details
    return VIOLATION, details
