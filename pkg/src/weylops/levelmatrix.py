"""Matrix form of level-e operators in characteristic p.

The polynomial ring is free over its subring of p^e-th powers with the
monomials below p^e (componentwise) as basis, so the operators linear
over that subring form a matrix ring of size p^(e*n).  Entries are kept
as p^e-th roots, i.e. ordinary polynomials: taking p^e-th powers is a
ring isomorphism onto the subring for a perfect prime field, so addition
and multiplication of root entries compute the true entries exactly and
no twisted arithmetic is needed.  Reassembly applies the power.
"""

from __future__ import annotations

from itertools import product

from .diffop import DiffOp, operator_from_monomial_values
from .errors import DomainError
from .poly import Polynomial, PolyRing, frobenius_decompose

SIZE_LIMIT = 256


class FrobeniusBasis:
    """The monomial basis {x^lam : 0 <= lam_i < p^e} in lex order."""

    __slots__ = ("ring", "e", "monomials", "_index")

    def __init__(self, ring: PolyRing, e: int):
        p = ring.characteristic
        if p == 0:
            raise DomainError("frobenius basis requires characteristic p > 0")
        if e < 0:
            raise DomainError("level e must be a natural number")
        size = p ** (e * ring.nvars)
        if size > SIZE_LIMIT:
            raise DomainError(
                f"basis size {size} exceeds the guardrail of {SIZE_LIMIT}"
            )
        q = p**e
        self.ring = ring
        self.e = e
        self.monomials = sorted(product(range(q), repeat=ring.nvars))
        self._index = {lam: i for i, lam in enumerate(self.monomials)}

    @property
    def size(self) -> int:
        return len(self.monomials)

    def index(self, lam) -> int:
        try:
            return self._index[tuple(lam)]
        except KeyError:
            raise DomainError(f"{lam} is not a basis exponent at level {self.e}")

    def __eq__(self, other):
        return (
            isinstance(other, FrobeniusBasis)
            and self.ring == other.ring
            and self.e == other.e
        )

    __hash__ = None


class LevelMatrix:
    """Square polynomial matrix representing a level-e operator.

    ``entries[r][c]`` is the root of the coefficient of the r-th basis
    monomial in the image of the c-th one.
    """

    __slots__ = ("basis", "entries")

    def __init__(self, basis: FrobeniusBasis, entries):
        entries = [list(r) for r in entries]
        n = basis.size
        if len(entries) != n or any(len(r) != n for r in entries):
            raise DomainError(f"level matrix must be {n}x{n}")
        for row in entries:
            for v in row:
                if not isinstance(v, Polynomial) or v.ring != basis.ring:
                    raise DomainError("entries must be polynomials of the base ring")
        self.basis = basis
        self.entries = entries

    @property
    def e(self) -> int:
        return self.basis.e

    @property
    def ring(self) -> PolyRing:
        return self.basis.ring

    @classmethod
    def identity(cls, basis: FrobeniusBasis) -> LevelMatrix:
        one, zero = basis.ring.one(), basis.ring.zero()
        return cls(
            basis,
            [
                [one if i == j else zero for j in range(basis.size)]
                for i in range(basis.size)
            ],
        )

    def _check(self, other: LevelMatrix):
        if self.basis != other.basis:
            raise DomainError("level matrix basis mismatch")

    def __add__(self, other: LevelMatrix) -> LevelMatrix:
        self._check(other)
        return LevelMatrix(
            self.basis,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __mul__(self, other: LevelMatrix) -> LevelMatrix:
        self._check(other)
        n = self.basis.size
        zero = self.ring.zero()
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return LevelMatrix(self.basis, out)

    def __eq__(self, other):
        return (
            isinstance(other, LevelMatrix)
            and self.basis == other.basis
            and self.entries == other.entries
        )

    __hash__ = None

    def __repr__(self):
        return f"<LevelMatrix e={self.e} size={self.basis.size}>"


def to_matrix(xi: DiffOp, e: int) -> LevelMatrix:
    """Represent a level <= e operator on the frobenius basis.

    Column lam holds the digit decomposition of the operator's value on
    x^lam; rejects operators whose level exceeds e.
    """
    if xi.ring.characteristic == 0:
        raise DomainError("level matrices require characteristic p > 0")
    if xi.level() > e:
        raise DomainError(f"operator has level {xi.level()} > {e}")
    basis = FrobeniusBasis(xi.ring, e)
    zero = xi.ring.zero()
    entries = [[zero] * basis.size for _ in range(basis.size)]
    for c, lam in enumerate(basis.monomials):
        value = xi.apply(xi.ring.monomial(lam))
        if value.is_zero():
            continue
        for lam_r, g in frobenius_decompose(value, e).items():
            entries[basis.index(lam_r)][c] = g
    return LevelMatrix(basis, entries)


def to_operator(m: LevelMatrix) -> DiffOp:
    """Inverse of :func:`to_matrix`: reassemble columns into monomial
    values and solve for the normal form over the basis box."""
    ring = m.ring
    q = ring.characteristic**m.e
    values = {}
    for c, lam in enumerate(m.basis.monomials):
        acc = ring.zero()
        for r, lam_r in enumerate(m.basis.monomials):
            g = m.entries[r][c]
            if not g.is_zero():
                acc = acc + (g**q) * ring.monomial(lam_r)
        values[lam] = acc
    return operator_from_monomial_values(ring, values)


def matrix_mul_consistency(xi: DiffOp, eta: DiffOp, e: int) -> bool:
    """Whether the matrix of a product equals the product of matrices."""
    if xi.ring != eta.ring:
        raise DomainError("operator ring mismatch")
    lhs = to_matrix(xi * eta, e)
    rhs = to_matrix(xi, e) * to_matrix(eta, e)
    return lhs == rhs
