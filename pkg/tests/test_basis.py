import random
from math import inf

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from icis.basis import (
    colength,
    complete_basis,
    is_zero_dimensional,
    normal_form,
    staircase,
    staircase_colength_bruteforce,
)
from icis.errors import BudgetExhaustedError
from icis.orders import grevlex, negdegrevlex
from icis.poly import Polynomial

R = ("x", "y")
x = Polynomial.variable(R, "x")
y = Polynomial.variable(R, "y")


class TestCompleteBasis:
    def test_global_circle_parabola(self):
        basis = complete_basis([x**2 + y**2 - 1, x - y], grevlex(R))
        assert basis.completed
        # reduced basis of a zero-dimensional ideal of 2 points
        assert colength(basis) == 2

    def test_local_plane_curve(self):
        basis = complete_basis([x**2 - y**3], negdegrevlex(R))
        assert basis.completed
        assert basis.leading_monomials == ((2, 0),)

    def test_zero_ideal(self):
        basis = complete_basis([Polynomial.zero(R)], grevlex(R))
        assert basis.generators == ()
        assert colength(basis) == inf

    def test_budget_exhaustion_is_loud(self):
        # cyclic-style system too big for a tiny budget
        R4 = ("a", "b", "c", "d")
        a, b, c, d = (Polynomial.variable(R4, n) for n in R4)
        gens = [
            a + b + c + d,
            a * b + b * c + c * d + d * a,
            a * b * c + b * c * d + c * d * a + d * a * b,
            a * b * c * d - 1,
        ]
        with pytest.raises(BudgetExhaustedError):
            complete_basis(gens, grevlex(R4), step_budget=10)

    def test_deterministic(self):
        gens = [x**3 - 2 * x * y, x**2 * y - 2 * y**2 + x]
        b1 = complete_basis(gens, grevlex(R))
        b2 = complete_basis(list(reversed(gens)), grevlex(R))
        assert b1.generators == b2.generators


class TestNormalForm:
    def test_zero_iff_member_global(self):
        basis = complete_basis([x**2 - y, y**2 - x], grevlex(R))
        member = (x**2 - y) * y + (y**2 - x) * x
        assert normal_form(member, basis).is_zero()
        assert not normal_form(x + y, basis).is_zero()

    def test_local_reduction_keeps_unit_reducibility(self):
        basis = complete_basis([x - x**2], negdegrevlex(R))
        # locally x - x^2 = x(1 - x), a unit times x, so x reduces to 0
        assert normal_form(x, basis).is_zero()

    def test_local_monomial_outside_leading_ideal_is_fixed(self):
        # leading ideal of <x^2 - y^3> locally is <x^2>; y^3 is a standard
        # monomial, so it must be its own normal form
        basis = complete_basis([x**2 - y**3], negdegrevlex(R))
        assert normal_form(y**3, basis) == y**3

    def test_result_not_divisible_by_leading_monomials(self):
        basis = complete_basis([x**2 + y**2 - 1, x * y - 1], grevlex(R))
        r = normal_form(x**5 + y**5, basis)
        for mono in r.terms:
            for lm in basis.leading_monomials:
                assert any(m < l for m, l in zip(mono, lm))

    @given(
        st.lists(
            st.tuples(st.integers(0, 3), st.integers(0, 3)),
            min_size=1,
            max_size=3,
        )
    )
    @settings(max_examples=30, deadline=None)
    def test_ideal_members_reduce_to_zero(self, multipliers):
        gens = [x**2 - y, y**3 - x * y]
        basis = complete_basis(gens, grevlex(R))
        f = Polynomial.zero(R)
        for g, e in zip(gens * 2, multipliers):
            f = f + g * Polynomial.monomial(R, e, 1)
        assert normal_form(f, basis).is_zero()


class TestColength:
    def test_morse_point(self):
        basis = complete_basis([2 * x, 2 * y], negdegrevlex(R))
        assert colength(basis) == 1

    def test_cusp_jacobian(self):
        basis = complete_basis([3 * x**2, 2 * y], negdegrevlex(R))
        assert colength(basis) == 2

    def test_monomial_box(self):
        basis = complete_basis([x**3, y**4], grevlex(R))
        assert colength(basis) == 12
        assert sorted(staircase(basis)) == [(0, 4), (3, 0)]

    def test_not_zero_dimensional(self):
        basis = complete_basis([x**2], grevlex(R))
        assert not is_zero_dimensional(basis)
        assert colength(basis) == inf

    def test_random_monomial_ideals_match_bruteforce(self):
        rng = random.Random(12345)
        for _ in range(30):
            nvars = rng.randint(2, 3)
            ring = ("x", "y", "z")[:nvars]
            lms = {tuple(rng.randint(1, 4) for _ in ring) for _ in range(rng.randint(2, 5))}
            # guarantee zero-dimensionality with pure powers
            for i in range(nvars):
                e = [0] * nvars
                e[i] = rng.randint(1, 5)
                lms.add(tuple(e))
            gens = [Polynomial.monomial(ring, e, 1) for e in sorted(lms)]
            basis = complete_basis(gens, grevlex(ring))
            assert colength(basis) == staircase_colength_bruteforce(
                basis.leading_monomials, len(ring)
            )


class TestStaircase:
    def test_antichain_of_leading_monomials(self):
        basis = complete_basis(
            [x**4, x**2 * y, y**3, x**3 * y**2], grevlex(R)
        )
        lms = basis.leading_monomials
        for a in lms:
            for b in lms:
                if a != b:
                    assert not all(i >= j for i, j in zip(a, b))

    def test_standard_monomials_are_normal_forms(self):
        basis = complete_basis([x**2 + y**2 - 1, x * y - 1], grevlex(R))
        gens = staircase(basis)
        standard = [
            (i, j)
            for i in range(5)
            for j in range(5)
            if not any(i >= a and j >= b for a, b in gens)
        ]
        assert len(standard) == colength(basis)
        for e in standard:
            m = Polynomial.monomial(R, e, 1)
            assert normal_form(m, basis) == m
