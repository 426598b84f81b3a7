"""Differential operators on S = k[x_1..x_n] in left-coefficient normal form.

An operator is a finitely supported sum of polynomial coefficients against
the divided-power basis: the basis element for exponent alpha sends x^beta
to binom(beta, alpha) * x^(beta - alpha) and is written ``d[a1,...,an]``.
In characteristic 0 it equals the alpha-th partial derivative divided by
alpha!; in characteristic p the high divided powers are genuine extra
generators, never assumed to be products of first-order ones.

Products are renormalized immediately (the basis is free over S, so the
normal form is canonical and equality is dict equality).  The order and
level filtrations come with independent oracles based on their defining
commutator characterizations.
"""

from __future__ import annotations

from fractions import Fraction

from . import _kernels as K
from . import exponents
from .errors import DomainError
from .poly import Polynomial, PolyRing


class DiffOp:
    """Operator in normal form: exponent tuple -> left polynomial coefficient.

    Stored coefficients are nonzero polynomials of the ambient ring;
    instances are immutable and all operations are pure.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- factories -------------------------------------------------------

    @classmethod
    def zero(cls, ring: PolyRing) -> DiffOp:
        return cls(ring, {})

    @classmethod
    def from_poly(cls, f: Polynomial) -> DiffOp:
        """The multiplication operator by f."""
        if f.is_zero():
            return cls.zero(f.ring)
        return cls(f.ring, {(0,) * f.ring.nvars: f})

    @classmethod
    def constant(cls, ring: PolyRing, c) -> DiffOp:
        return cls.from_poly(ring.constant(c))

    @classmethod
    def basis(cls, ring: PolyRing, alpha) -> DiffOp:
        """The divided-power basis operator d^[alpha]."""
        alpha = tuple(alpha)
        exponents.check_arity(alpha, ring.nvars)
        if any(a < 0 for a in alpha):
            raise DomainError(f"negative entry in operator exponent {alpha}")
        return cls(ring, {alpha: ring.one()})

    @classmethod
    def partial(cls, ring: PolyRing, i: int) -> DiffOp:
        """The first-order derivative in the i-th variable."""
        if not 0 <= i < ring.nvars:
            raise DomainError(f"variable index {i} out of range")
        return cls.basis(ring, tuple(1 if j == i else 0 for j in range(ring.nvars)))

    @classmethod
    def from_terms(cls, ring: PolyRing, mapping) -> DiffOp:
        terms = {}
        for alpha, f in mapping.items():
            alpha = tuple(alpha)
            exponents.check_arity(alpha, ring.nvars)
            if not isinstance(f, Polynomial):
                f = ring.constant(f)
            if f.ring != ring:
                raise DomainError("coefficient ring mismatch")
            if not f.is_zero():
                g = terms.get(alpha)
                f = f if g is None else g + f
                if f.is_zero():
                    terms.pop(alpha, None)
                else:
                    terms[alpha] = f
        return cls(ring, terms)

    # -- raw-dict bridge for the kernels ----------------------------------

    def _raw(self) -> dict:
        return {alpha: f.terms for alpha, f in self.terms.items()}

    @classmethod
    def _from_raw(cls, ring: PolyRing, raw: dict) -> DiffOp:
        return cls(ring, {a: Polynomial(ring, t) for a, t in raw.items()})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, alpha) -> Polynomial:
        return self.terms.get(tuple(alpha), self.ring.zero())

    def order(self) -> int:
        """Largest |alpha| in the support; -1 for the zero operator."""
        if not self.terms:
            return -1
        return max(sum(a) for a in self.terms)

    def level(self) -> int:
        """Smallest e with every supported exponent below p^e componentwise.

        Characteristic p only; this is the least level subring (operators
        linear over the p^e-th powers) containing the operator.  The zero
        operator has level 0.
        """
        p = self.ring.characteristic
        if p == 0:
            raise DomainError("level filtration requires characteristic p > 0")
        e = 0
        for alpha in self.terms:
            for a in alpha:
                while a > p**e - 1:
                    e += 1
        return e

    def constant_term(self) -> Polynomial:
        """The coefficient at exponent 0, i.e. the value on 1."""
        return self.coefficient((0,) * self.ring.nvars)

    def derivation_part(self) -> DiffOp:
        """For order <= 1: the summand with the constant part removed."""
        if self.order() > 1:
            raise DomainError("derivation part defined for order <= 1 only")
        return DiffOp(
            self.ring,
            {a: f for a, f in self.terms.items() if sum(a) == 1},
        )

    def is_derivation(self) -> bool:
        """Order <= 1 with no multiplication part (Leibniz rule holds)."""
        return all(sum(a) == 1 for a in self.terms)

    # -- application and arithmetic ----------------------------------------

    def apply(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise DomainError("operator/polynomial ring mismatch")
        return Polynomial(
            self.ring,
            K.diffop_apply(self._raw(), f.terms, self.ring.characteristic),
        )

    def __call__(self, f: Polynomial) -> Polynomial:
        return self.apply(f)

    def _coerce(self, other):
        if isinstance(other, DiffOp):
            if other.ring != self.ring:
                raise DomainError("operator ring mismatch")
            return other
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise DomainError("operator ring mismatch")
            return DiffOp.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return DiffOp.constant(self.ring, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for alpha, f in other.terms.items():
            g = terms.get(alpha)
            h = f if g is None else g + f
            if h.is_zero():
                terms.pop(alpha, None)
            else:
                terms[alpha] = h
        return DiffOp(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return DiffOp(self.ring, {a: -f for a, f in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        """Noncommutative product, self first; renormalizes."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return DiffOp._from_raw(
            self.ring,
            K.diffop_mul(self._raw(), other._raw(), self.ring.characteristic),
        )

    def __rmul__(self, other):
        """other * self for polynomial or scalar left factors."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise DomainError("operator powers must be natural numbers")
        result = DiffOp.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except DomainError:
            return False
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __str__(self):
        from .render import render_op

        return render_op(self)

    def __repr__(self):
        return f"<DiffOp {self}>"


def bracket(xi: DiffOp, eta: DiffOp) -> DiffOp:
    """Commutator xi*eta - eta*xi."""
    return xi * eta - eta * xi


def order_by_bracket_oracle(xi: DiffOp, degree_bound: int = 2) -> int:
    """Order via the inductive commutator characterization.

    Recursively brackets against every monomial of positive degree up to
    ``degree_bound`` and reports the depth at which all results land in
    the ring.  Agrees with :meth:`DiffOp.order` for every bound >= 1; the
    bound is a testing heuristic, not part of the contract.
    """
    if xi.is_zero():
        raise DomainError("bracket oracle is undefined on the zero operator")
    if degree_bound < 1:
        raise DomainError("degree_bound must be >= 1")
    ring = xi.ring
    monomials = [
        DiffOp.from_poly(ring.monomial(e))
        for d in range(1, degree_bound + 1)
        for e in exponents.iter_graded(ring.nvars, d)
    ]

    def depth(op: DiffOp) -> int:
        if op.is_zero():
            return -1
        if all(sum(a) == 0 for a in op.terms):
            return 0
        return 1 + max(depth(bracket(op, m)) for m in monomials)

    return depth(xi)


def level_by_commutation_oracle(xi: DiffOp, e: int, degree_bound: int = 3) -> bool:
    """Check linearity over the p^e-th powers by commutation.

    True iff the operator commutes with f^(p^e) for every monomial f of
    degree at most ``degree_bound``.
    """
    p = xi.ring.characteristic
    if p == 0:
        raise DomainError("level oracle requires characteristic p > 0")
    if e < 0:
        raise DomainError("level e must be a natural number")
    q = p**e
    ring = xi.ring
    for exp in exponents.iter_up_to_degree(ring.nvars, degree_bound):
        f = DiffOp.from_poly(ring.monomial(exp)) ** q
        if not bracket(xi, f).is_zero():
            return False
    return True


def operator_from_monomial_values(ring: PolyRing, values) -> DiffOp:
    """Reconstruct the normal form of an operator from monomial values.

    ``values`` maps exponent tuples to the polynomial the operator returns
    on the corresponding monomial.  The index set must be downward closed
    (every componentwise-smaller exponent present); the divided-power
    coefficients then satisfy a triangular system with unit diagonal that
    is solved by increasing total degree.
    """
    table = {tuple(b): v for b, v in dict(values).items()}
    for beta in table:
        for j, b in enumerate(beta):
            if b and tuple(
                x - 1 if i == j else x for i, x in enumerate(beta)
            ) not in table:
                raise DomainError(
                    f"value index set not downward closed below {beta}"
                )
    solved: list = []
    for beta in sorted(table, key=lambda b: (sum(b), b)):
        acc = table[beta]
        for alpha, f in solved:
            if exponents.leq(alpha, beta):
                c = exponents.multinomial(beta, alpha)
                acc = acc - f * ring.monomial(exponents.subtract(beta, alpha)) * c
        if not acc.is_zero():
            solved.append((beta, acc))
    return DiffOp.from_terms(ring, dict(solved))
