"""Finite linear group actions on polynomials and on operators.

A group element is an invertible matrix acting on the span of the
variables (the image of x_j is the j-th column combination), extended as
an algebra automorphism by substitution.  The action on operators is by
conjugation, so applying a transformed operator agrees with transforming,
applying, and transforming back.  Reynolds averaging projects onto the
invariants whenever the group order is invertible in the field.
"""

from __future__ import annotations

from .diffop import DiffOp
from .errors import DomainError
from .linalg import Matrix
from .poly import Polynomial, PolyRing, RingMap, apply_ring_map
from .transpose import standard_transpose, transport_via_coordinates


class GroupElement:
    """Invertible matrix over the coefficient field."""

    __slots__ = ("matrix", "_key")

    def __init__(self, matrix: Matrix):
        if matrix.nrows != matrix.ncols:
            raise DomainError("group elements must be square matrices")
        if matrix.rank() != matrix.nrows:
            raise DomainError("group elements must be invertible")
        self.matrix = matrix
        self._key = tuple(tuple(r) for r in matrix.rows)

    @property
    def n(self) -> int:
        return self.matrix.nrows

    @classmethod
    def from_rows(cls, field, rows) -> GroupElement:
        return cls(Matrix(field, rows))

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.matrix * other.matrix)

    def inverse(self) -> GroupElement:
        return GroupElement(self.matrix.inverse())

    def is_identity(self) -> bool:
        return self.matrix == Matrix.identity(self.matrix.field, self.n)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"<GroupElement {self.matrix!r}>"

    def ring_map(self, ring: PolyRing) -> RingMap:
        if ring.nvars != self.n or ring.field != self.matrix.field:
            raise DomainError("group element does not act on this ring")
        return RingMap.from_matrix(
            ring, self.matrix.rows, inverse_rows=self.matrix.inverse().rows
        )


class FiniteGroup:
    """Explicit list of elements; closure, inverses and identity checked."""

    __slots__ = ("elements",)

    def __init__(self, elements):
        elements = list(elements)
        if not elements:
            raise DomainError("a group needs at least the identity")
        seen = set(elements)
        if len(seen) != len(elements):
            raise DomainError("duplicate group elements")
        identity = GroupElement(
            Matrix.identity(elements[0].matrix.field, elements[0].n)
        )
        if identity not in seen:
            raise DomainError("group does not contain the identity")
        for g in elements:
            if g.inverse() not in seen:
                raise DomainError("group is not closed under inverses")
            for h in elements:
                if g * h not in seen:
                    raise DomainError("group is not closed under products")
        self.elements = elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def pseudoreflections(self):
        return [g for g in self.elements if is_pseudoreflection(g)]


def is_pseudoreflection(g: GroupElement) -> bool:
    """Nontrivial element fixing a hyperplane pointwise: rank(g - 1) == 1."""
    if g.is_identity():
        return False
    delta = g.matrix - Matrix.identity(g.matrix.field, g.n)
    return delta.rank() == 1


def act_on_poly(g: GroupElement, f: Polynomial) -> Polynomial:
    """Substitution action of the matrix on a polynomial."""
    return apply_ring_map(g.ring_map(f.ring), f)


def act_on_op(g: GroupElement, xi: DiffOp) -> DiffOp:
    """Conjugation action on an operator, in normal form."""
    return transport_via_coordinates(g.ring_map(xi.ring), xi)


def reynolds(G: FiniteGroup, xi: DiffOp) -> DiffOp:
    """Group average; projects onto the invariant operators.

    Requires the group order to be invertible in the coefficient field
    (always in characteristic 0, and in characteristic p exactly when p
    does not divide the order).
    """
    field = xi.ring.field
    if field.is_zero(field.from_int(G.order)):
        raise DomainError(
            f"group order {G.order} is not invertible in characteristic "
            f"{field.characteristic}"
        )
    total = DiffOp.zero(xi.ring)
    for g in G:
        total = total + act_on_op(g, xi)
    scale = field.inv(field.from_int(G.order))
    return DiffOp(
        xi.ring, {alpha: f * scale for alpha, f in total.terms.items()}
    )


def is_invariant(G: FiniteGroup, xi: DiffOp) -> bool:
    return all(act_on_op(g, xi) == xi for g in G)


def is_invariant_poly(G: FiniteGroup, f: Polynomial) -> bool:
    return all(act_on_poly(g, f) == f for g in G)


def equivariance_check(G: FiniteGroup, xi: DiffOp, allow_modular: bool = False) -> bool:
    """Whether the standard transposition commutes with the whole action.

    True for every linear action in characteristic 0; pass
    ``allow_modular`` to try it experimentally in characteristic p.
    """
    if xi.ring.characteristic != 0 and not allow_modular:
        raise DomainError(
            "equivariance check is guaranteed in characteristic 0 only; "
            "pass allow_modular=True to run it anyway"
        )
    for g in G:
        if standard_transpose(act_on_op(g, xi)) != act_on_op(
            g, standard_transpose(xi)
        ):
            return False
    return True
