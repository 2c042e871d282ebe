import random
from functools import reduce

import pytest

from sstorus.idempotents import (
    evaluate_point,
    from_idempotent_basis,
    idempotent_h,
    idempotent_univariate,
    multiply_idempotent_basis,
    to_idempotent_basis,
)
from sstorus.torus import (
    Basis,
    ExponentVector,
    MismatchError,
    TorusElement,
    TorusSpec,
    add,
    multiply,
    multiply_by_coordinate,
    multiply_by_linear,
    one,
    scale,
    zero,
)
from util import random_element


def monomial(spec, a, b, c=1):
    return TorusElement(spec, Basis.BINOMIAL, {ExponentVector(a, b): c})


class TestUnivariate:
    def test_p2_a0(self):
        spec = TorusSpec(1, 1, 2, 1)
        expected = add(one(spec), monomial(spec, (1,), (0,)))
        assert idempotent_univariate(spec, "x", 1, 0) == expected

    def test_top_index_single_term(self):
        for spec in (TorusSpec(1, 1, 2, 1), TorusSpec(1, 1, 3, 1), TorusSpec(1, 1, 2, 2)):
            q = spec.q
            assert idempotent_univariate(spec, "x", 1, q - 1) == monomial(spec, (q - 1,), (0,))

    def test_p3_a1(self):
        spec = TorusSpec(1, 1, 3, 1)
        expected = add(monomial(spec, (1,), (0,)), monomial(spec, (2,), (0,)))
        assert idempotent_univariate(spec, "x", 1, 1) == expected

    def test_out_of_range(self):
        spec = TorusSpec(1, 1, 2, 1)
        with pytest.raises(ValueError):
            idempotent_univariate(spec, "x", 1, 2)
        with pytest.raises(ValueError):
            idempotent_univariate(spec, "y", 2, 0)

    def test_dominance(self):
        # C(x,a) X_a = X_a and C(x,j) X_a = 0 for j > a, all q <= 9
        for p, r in ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)):
            spec = TorusSpec(1, 0, p, r)
            q = spec.q
            for a in range(q):
                xa = idempotent_univariate(spec, "x", 1, a)
                assert multiply(monomial(spec, (a,), ()), xa) == xa
                for j in range(a + 1, q):
                    assert multiply(monomial(spec, (j,), ()), xa).is_zero()


class TestIdempotentH:
    def test_gl11_p2_corner(self):
        spec = TorusSpec(1, 1, 2, 1)
        h00 = idempotent_h(spec, ExponentVector((0,), (0,)))
        expected = reduce(
            add,
            [
                one(spec),
                monomial(spec, (1,), (0,)),
                monomial(spec, (0,), (1,)),
                monomial(spec, (1,), (1,)),
            ],
        )
        assert h00 == expected

    def test_top_label_single_monomial(self):
        for spec in (TorusSpec(1, 1, 2, 1), TorusSpec(1, 1, 3, 1), TorusSpec(1, 1, 2, 2)):
            q = spec.q
            ev = ExponentVector((q - 1,), (q - 1,))
            assert idempotent_h(spec, ev) == monomial(spec, (q - 1,), (q - 1,))

    def test_gl11_p2_11_is_xy(self):
        spec = TorusSpec(1, 1, 2, 1)
        assert idempotent_h(spec, ExponentVector((1,), (1,))) == monomial(spec, (1,), (1,))

    def test_matches_product_of_univariates(self):
        for spec in (TorusSpec(2, 1, 2, 1), TorusSpec(1, 2, 3, 1)):
            for ev in spec.labels():
                factors = [
                    idempotent_univariate(spec, "x", i + 1, ev.a[i]) for i in range(spec.m)
                ] + [
                    idempotent_univariate(spec, "y", j + 1, ev.b[j]) for j in range(spec.n)
                ]
                assert reduce(multiply, factors) == idempotent_h(spec, ev)


class TestOrthogonality:
    def test_exhaustive(self):
        for t in (
            (1, 1, 2, 1),
            (1, 1, 3, 1),
            (2, 1, 2, 1),
            (1, 1, 2, 2),
            (2, 1, 3, 1),
            (2, 2, 3, 1),
            (1, 1, 3, 2),
        ):
            spec = TorusSpec(*t)
            labels = list(spec.labels())
            hs = {ev: idempotent_h(spec, ev) for ev in labels}
            z = zero(spec)
            for u in labels:
                for v in labels:
                    expected = hs[u] if u == v else z
                    assert multiply(hs[u], hs[v]) == expected, (t, u, v)

    def test_completeness(self):
        for t in ((1, 1, 2, 1), (1, 1, 3, 1), (2, 1, 3, 1), (2, 2, 2, 1), (1, 1, 2, 2)):
            spec = TorusSpec(*t)
            total = reduce(add, (idempotent_h(spec, ev) for ev in spec.labels()))
            assert total == one(spec)


class TestEigenRelations:
    def test_coordinate_action(self):
        for t in ((1, 1, 2, 1), (1, 1, 3, 1), (2, 1, 3, 1), (2, 2, 2, 1)):
            spec = TorusSpec(*t)
            for ev in spec.labels():
                h = idempotent_h(spec, ev)
                for i in range(spec.m):
                    assert multiply_by_coordinate(h, "x", i + 1) == scale(ev.a[i], h)
                for j in range(spec.n):
                    assert multiply_by_coordinate(h, "y", j + 1) == scale(ev.b[j], h)

    def test_linear_action(self):
        spec = TorusSpec(1, 1, 2, 1)
        h10 = idempotent_h(spec, ExponentVector((1,), (0,)))
        h11 = idempotent_h(spec, ExponentVector((1,), (1,)))
        assert multiply_by_linear(h10, 1, 1) == h10
        assert multiply_by_linear(h11, 1, 1).is_zero()


class TestBasisChange:
    def test_point_evaluation_example(self):
        spec = TorusSpec(1, 0, 3, 1)
        f = monomial(spec, (1,), ())  # C(x, 1) evaluates to a mod 3
        coords = to_idempotent_basis(f)
        assert coords.terms == {
            ExponentVector((1,), ()): 1,
            ExponentVector((2,), ()): 2,
        }

    def test_one_becomes_all_ones(self):
        for t in ((1, 1, 2, 1), (2, 1, 3, 1)):
            spec = TorusSpec(*t)
            coords = to_idempotent_basis(one(spec))
            assert coords.terms == {ev: 1 for ev in spec.labels()}
            assert from_idempotent_basis(coords) == one(spec)

    def test_idempotent_has_delta_coordinates(self):
        spec = TorusSpec(2, 1, 2, 1)
        for ev in spec.labels():
            coords = to_idempotent_basis(idempotent_h(spec, ev))
            assert coords.terms == {ev: 1}

    def test_roundtrip_random(self):
        rng = random.Random(11)
        for t in ((1, 1, 2, 1), (1, 1, 3, 1), (2, 1, 2, 1), (1, 1, 2, 2)):
            spec = TorusSpec(*t)
            for _ in range(100):
                f = random_element(spec, rng, max_terms=4)
                assert from_idempotent_basis(to_idempotent_basis(f)) == f
                g = random_element(spec, rng, max_terms=4, basis=Basis.IDEMPOTENT)
                assert to_idempotent_basis(from_idempotent_basis(g)) == g

    def test_basis_tag_enforced(self):
        spec = TorusSpec(1, 1, 2, 1)
        with pytest.raises(MismatchError):
            to_idempotent_basis(zero(spec, Basis.IDEMPOTENT))
        with pytest.raises(MismatchError):
            from_idempotent_basis(one(spec))

    def test_evaluate_point_matches_coordinates(self):
        spec = TorusSpec(2, 1, 3, 1)
        rng = random.Random(12)
        for _ in range(10):
            f = random_element(spec, rng, max_terms=4)
            coords = to_idempotent_basis(f)
            for ev in spec.labels():
                assert evaluate_point(f, ev) == coords.coefficient(ev)


class TestIdempotentBasisProduct:
    def test_zero_one_coefficients_are_idempotent(self):
        spec = TorusSpec(1, 1, 3, 1)
        f = TorusElement(
            spec,
            Basis.IDEMPOTENT,
            {ExponentVector((0,), (1,)): 1, ExponentVector((2,), (2,)): 1},
        )
        assert multiply_idempotent_basis(f, f) == f

    def test_distinct_idempotents_orthogonal(self):
        spec = TorusSpec(1, 1, 2, 1)
        u = TorusElement(spec, Basis.IDEMPOTENT, {ExponentVector((0,), (0,)): 1})
        v = TorusElement(spec, Basis.IDEMPOTENT, {ExponentVector((1,), (0,)): 1})
        assert multiply_idempotent_basis(u, v).is_zero()

    def test_consistent_with_binomial_product(self):
        rng = random.Random(13)
        for t in ((1, 1, 2, 1), (1, 1, 3, 1), (2, 1, 2, 1)):
            spec = TorusSpec(*t)
            for _ in range(50):
                f = random_element(spec, rng, max_terms=4)
                g = random_element(spec, rng, max_terms=4)
                via_idempotent = from_idempotent_basis(
                    multiply_idempotent_basis(
                        to_idempotent_basis(f), to_idempotent_basis(g)
                    )
                )
                assert via_idempotent == multiply(f, g)

    def test_basis_tag_enforced(self):
        spec = TorusSpec(1, 1, 2, 1)
        with pytest.raises(MismatchError):
            multiply_idempotent_basis(one(spec), one(spec))
