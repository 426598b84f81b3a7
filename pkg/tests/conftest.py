"""Shared deterministic random generators for the property suites."""

import random
from fractions import Fraction

import pytest

from weylops import DiffOp, FieldSpec, PolyRing

CHARACTERISTICS = (0, 2, 3, 5)


def make_ring(char: int, nvars: int, names=None) -> PolyRing:
    return PolyRing(FieldSpec(char), nvars, names)


def random_coeff(rng: random.Random, field: FieldSpec):
    if field.is_modular:
        return rng.randrange(1, field.characteristic)
    return Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 4))


def random_exponent(rng, nvars, max_total):
    """Exponent tuple with total degree at most max_total."""
    total = rng.randint(0, max_total)
    exp = [0] * nvars
    for _ in range(total):
        exp[rng.randrange(nvars)] += 1
    return tuple(exp)


def random_poly(rng, ring, max_degree=3, max_terms=3, allow_zero=True):
    terms = {}
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        exp = random_exponent(rng, ring.nvars, max_degree)
        terms[exp] = random_coeff(rng, ring.field)
    f = ring.from_terms(terms)
    if not allow_zero and f.is_zero():
        return ring.one()
    return f


def random_diffop(rng, ring, max_order=4, max_terms=3, coeff_degree=3,
                  coeff_terms=2, allow_zero=True):
    terms = {}
    for _ in range(rng.randint(0 if allow_zero else 1, max_terms)):
        alpha = random_exponent(rng, ring.nvars, max_order)
        coeff = random_poly(rng, ring, max_degree=coeff_degree,
                            max_terms=coeff_terms, allow_zero=False)
        terms[alpha] = coeff
    op = DiffOp.from_terms(ring, terms)
    if not allow_zero and op.is_zero():
        return DiffOp.constant(ring, 1)
    return op


def random_level_bounded_op(rng, ring, e, max_terms=3, coeff_degree=3):
    """Random operator of level at most e (support inside the p^e box)."""
    q = ring.characteristic**e
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        alpha = tuple(rng.randrange(q) for _ in range(ring.nvars))
        terms[alpha] = random_poly(rng, ring, max_degree=coeff_degree,
                                   max_terms=2, allow_zero=False)
    return DiffOp.from_terms(ring, terms)


@pytest.fixture
def rng():
    return random.Random(20260810)
