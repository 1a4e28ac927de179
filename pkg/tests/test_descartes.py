"""Sign changes, the sign-rule shortcut, and the Sturm/Yun root-count oracle."""

import itertools
import random
from fractions import Fraction

import pytest

from hyperpoly import (
    DomainError,
    RationalField,
    SIGN,
    count_negative_roots,
    count_positive_roots,
    descartes_bound,
    mult_neg_one_direct,
    mult_one_direct,
    multiplicity,
    poly,
    sign_changes,
    substitute_neg,
    verify_descartes,
    verify_descartes_batch,
)
from hyperpoly import ratpoly
from hyperpoly.descartes import split_poly_corpus, zero_root_order

RATIONALS = RationalField()


class TestSignChanges:
    def test_examples(self):
        assert sign_changes(poly(SIGN, [1, -1, -1, 1])) == 2
        assert sign_changes(poly(SIGN, [1, 0, 1])) == 0
        assert sign_changes(poly(SIGN, [1, 0, -1, 0, 1])) == 2

    def test_monomial_has_none(self):
        assert sign_changes(poly(SIGN, [0, 0, 1])) == 0

    def test_zero_polynomial_rejected(self):
        with pytest.raises(DomainError):
            sign_changes(poly(SIGN, []))

    def test_wrong_field_rejected(self):
        with pytest.raises(DomainError):
            sign_changes(poly(RATIONALS, [1, -1]))


class TestDirectMultiplicities:
    def test_cubic(self):
        p = poly(SIGN, [1, -1, -1, 1])
        assert mult_one_direct(p) == 2
        assert mult_neg_one_direct(p) == 1

    def test_monomials(self):
        for n in range(1, 5):
            p = poly(SIGN, [0] * n + [1])
            assert mult_one_direct(p) == 0
            assert mult_neg_one_direct(p) == 0

    def test_matches_recursion_up_to_degree_four(self):
        memo = {}
        one, minus = SIGN.element(1), SIGN.element(-1)
        for vec in itertools.product((0, 1, -1), repeat=5):
            p = poly(SIGN, vec)
            if p.is_zero():
                continue
            assert mult_one_direct(p) == multiplicity(p, one, memo=memo).multiplicity
            assert mult_neg_one_direct(p) == \
                multiplicity(p, minus, memo=memo).multiplicity


class TestSubstituteNeg:
    def test_pointwise_oracle(self):
        rng = random.Random(3)
        for _ in range(25):
            coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 7))]
            p = poly(RATIONALS, coeffs)
            q = substitute_neg(p)
            for x in (Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 3)):
                lhs = ratpoly.eval_at([c.value for c in q.coeffs] or [Fraction(0)], x)
                rhs = ratpoly.eval_at(coeffs, -x)
                assert lhs == rhs


class TestDescartesBound:
    def test_examples(self):
        assert descartes_bound(poly(RATIONALS, [6, -7, 0, 1])) == (2, 1)
        assert descartes_bound(poly(RATIONALS, [1, 1])) == (0, 1)
        assert descartes_bound(poly(RATIONALS, [1, -2, 1])) == (2, 0)


class TestSturmOracle:
    def test_known_root_counts(self):
        # roots 1, 2, -3
        assert count_positive_roots(poly(RATIONALS, [6, -7, 0, 1])) == 2
        # (T-1)^2 (T+1)
        assert count_positive_roots(poly(RATIONALS, [1, -1, -1, 1])) == 2
        assert count_positive_roots(poly(RATIONALS, [1, 0, 1])) == 0

    def test_negative_side(self):
        assert count_negative_roots(poly(RATIONALS, [6, -7, 0, 1])) == 1
        assert count_negative_roots(poly(RATIONALS, [1, -1, -1, 1])) == 1

    def test_roots_at_zero_are_excluded(self):
        # T^2 (T - 1)
        p = poly(RATIONALS, [0, 0, -1, 1])
        assert count_positive_roots(p) == 1
        assert count_negative_roots(p) == 0
        assert zero_root_order(p) == 2

    def test_counts_by_construction(self):
        rng = random.Random(11)
        pool = [Fraction(v) for v in (1, -1, 2, -2, 3)] + [Fraction(1, 2)]
        for _ in range(60):
            deg = rng.randint(1, 6)
            roots = [rng.choice(pool) for _ in range(deg)]
            p = poly(RATIONALS, ratpoly.expand_roots(roots, Fraction(1)))
            assert count_positive_roots(p) == sum(1 for r in roots if r > 0)
            assert count_negative_roots(p) == sum(1 for r in roots if r < 0)

    def test_full_line_consistency_per_squarefree_factor(self):
        rng = random.Random(13)
        pool = [Fraction(v) for v in (0, 1, -1, 2, -2)] + [Fraction(-1, 2)]
        for _ in range(40):
            deg = rng.randint(1, 6)
            roots = [rng.choice(pool) for _ in range(deg)]
            coeffs = ratpoly.expand_roots(roots, Fraction(1))
            if rng.random() < 0.4:
                coeffs = ratpoly.mul(coeffs, [Fraction(1), Fraction(0), Fraction(1)])
            stripped = list(coeffs)
            while stripped and stripped[0] == 0:
                stripped.pop(0)
            for f, _ in ratpoly.yun_squarefree(stripped):
                pos = ratpoly.count_distinct_positive_roots(f)
                neg = ratpoly.count_distinct_negative_roots(f)
                assert pos + neg == ratpoly.count_distinct_real_roots(f)

    def test_yun_recovers_multiplicity_structure(self):
        # (T-1)^2 (T+1) (T-1/2)^3
        coeffs = ratpoly.mul(
            ratpoly.expand_roots([Fraction(1), Fraction(1), Fraction(-1)]),
            ratpoly.expand_roots([Fraction(1, 2)] * 3))
        factors = {i: f for f, i in ratpoly.yun_squarefree(coeffs)}
        assert set(factors) == {1, 2, 3}
        assert factors[1] == ratpoly.expand_roots([Fraction(-1)])
        assert factors[2] == ratpoly.expand_roots([Fraction(1)])
        assert factors[3] == ratpoly.expand_roots([Fraction(1, 2)])


class TestVerifyDescartes:
    def test_equality_on_certified_split(self):
        p = poly(RATIONALS, [6, -7, 0, 1])
        report = verify_descartes(p, split_hint=[1, 2, -3])
        assert report.ok and report.split_certified
        assert report.bound_pos == report.positive_roots == 2
        assert report.bound_neg == report.negative_roots == 1

    def test_inequality_without_hint(self):
        # (T-1)^2 (T^2+1): two positive roots against a bound of four
        coeffs = ratpoly.mul(ratpoly.expand_roots([Fraction(1), Fraction(1)]),
                             [Fraction(1), Fraction(0), Fraction(1)])
        report = verify_descartes(poly(RATIONALS, coeffs))
        assert report.ok
        assert report.positive_roots == 2
        assert report.bound_pos == 4

    def test_no_real_roots(self):
        report = verify_descartes(poly(RATIONALS, [1, 1, 1]))
        assert report.ok and report.positive_roots == 0 and report.bound_pos == 0

    def test_bad_hint_rejected(self):
        with pytest.raises(DomainError):
            verify_descartes(poly(RATIONALS, [6, -7, 0, 1]), split_hint=[1, 2, 3])

    def test_split_corpus_reaches_equality(self):
        reports = verify_descartes_batch(count=60, seed=5)
        assert len(reports) == 60
        assert all(r.ok for r in reports)
        assert all(r.bound_pos == r.positive_roots for r in reports)

    def test_corpus_is_deterministic(self):
        a = [(str(p.values()), roots) for p, roots in split_poly_corpus(20, seed=9)]
        b = [(str(p.values()), roots) for p, roots in split_poly_corpus(20, seed=9)]
        assert a == b
