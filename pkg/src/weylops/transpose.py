"""Anti-automorphisms of the operator ring that fix the polynomials.

The standard transposition sends a left-coefficient term f*d^[alpha] to
(-1)^|alpha| * d^[alpha]*f and is involutive in every characteristic.  In
characteristic 0 the ring is generated in order one, and prescribing
d_i -> -d_i + f_i with each twist polynomial f_i univariate in its own
variable yields further ("twisted") involutive anti-automorphisms; no such
freedom exists in characteristic p, where the twisted construction is
refused.  Conjugation by an invertible linear substitution is provided as
the transport used for coordinate-invariance checks.
"""

from __future__ import annotations

from math import factorial

from . import exponents
from .diffop import DiffOp, operator_from_monomial_values
from .errors import DomainError
from .poly import Polynomial, PolyRing, RingMap, apply_ring_map


def standard_transpose(xi: DiffOp) -> DiffOp:
    """Sign-the-basis transposition, renormalized into left-coefficient form."""
    ring = xi.ring
    out = DiffOp.zero(ring)
    for alpha, f in xi.terms.items():
        term = DiffOp.basis(ring, alpha) * f
        if exponents.degree(alpha) % 2:
            term = -term
        out = out + term
    return out


def twisted_transpose(twist, xi: DiffOp) -> DiffOp:
    """Anti-multiplicative extension of x_i -> x_i, d_i -> -d_i + f_i.

    Characteristic 0 only; each twist polynomial may involve only its own
    variable.  The divided-power basis element for alpha is 1/alpha! times
    the product of the first-order derivatives, and the twisted images of
    distinct variables' generators commute, so the image of a normal-form
    term is (1/alpha!) * prod_i (-d_i + f_i)^alpha_i * f_alpha.
    """
    ring = xi.ring
    if ring.characteristic != 0:
        raise DomainError(
            "twisted transpositions exist only in characteristic 0"
        )
    twist = list(twist)
    if len(twist) != ring.nvars:
        raise DomainError(f"need {ring.nvars} twist polynomials")
    images = []
    for i, f in enumerate(twist):
        if not isinstance(f, Polynomial) or f.ring != ring:
            raise DomainError("twist polynomials must live in the operator's ring")
        if any(e[j] for e in f.terms for j in range(ring.nvars) if j != i):
            raise DomainError(
                f"twist polynomial {i} may only involve variable "
                f"{ring.var_names[i]}"
            )
        images.append(-DiffOp.partial(ring, i) + f)

    image_cache: dict[tuple, DiffOp] = {}

    def basis_image(alpha) -> DiffOp:
        op = image_cache.get(alpha)
        if op is None:
            op = DiffOp.constant(ring, 1)
            for i, a in enumerate(alpha):
                if a:
                    op = op * images[i] ** a
            denom = 1
            for a in alpha:
                denom *= factorial(a)
            if denom != 1:
                op = DiffOp.from_poly(ring.constant(f"1/{denom}")) * op
            image_cache[alpha] = op
        return op

    out = DiffOp.zero(ring)
    for alpha, f in xi.terms.items():
        out = out + basis_image(alpha) * f
    return out


class AntiAutomorphism:
    """Callable transposition with a named kind.

    ``standard`` works in every characteristic; ``twisted`` carries its
    twist polynomials and requires characteristic 0.  The fixed-ring,
    anti-multiplicativity and involutivity contracts are enforced by the
    test suites rather than at construction.
    """

    __slots__ = ("kind", "ring", "twist")

    def __init__(self, kind: str, ring: PolyRing, twist=None):
        if kind not in ("standard", "twisted"):
            raise DomainError(f"unknown transposition kind {kind!r}")
        self.kind = kind
        self.ring = ring
        self.twist = tuple(twist) if twist is not None else None
        if kind == "twisted" and self.twist is None:
            raise DomainError("twisted transposition needs twist polynomials")

    @classmethod
    def standard(cls, ring: PolyRing) -> AntiAutomorphism:
        return cls("standard", ring)

    @classmethod
    def twisted(cls, ring: PolyRing, twist) -> AntiAutomorphism:
        phi = cls("twisted", ring, twist=twist)
        phi(DiffOp.zero(ring))  # validate the twist eagerly
        return phi

    def __call__(self, xi: DiffOp) -> DiffOp:
        if xi.ring != self.ring:
            raise DomainError("operator ring mismatch")
        if self.kind == "standard":
            return standard_transpose(xi)
        return twisted_transpose(self.twist, xi)

    def __repr__(self):
        return f"<AntiAutomorphism {self.kind} on {self.ring!r}>"


def check_graded_sign(xi: DiffOp, phi) -> bool:
    """Whether phi(xi) + (-1)^(n+1) xi drops order, n the order of xi.

    This is the statement that the induced map on the associated graded
    ring is the identity in even degrees and -1 in odd ones.
    """
    if xi.is_zero():
        raise DomainError("graded-sign check is undefined on the zero operator")
    n = xi.order()
    combo = phi(xi) + (xi if (n + 1) % 2 == 0 else -xi)
    return combo.order() <= n - 1


def derivation_formula_check(theta: DiffOp, phi) -> bool:
    """For a derivation, phi(theta) must equal -theta plus the
    multiplication operator by phi(theta)(1)."""
    if not theta.is_derivation():
        raise DomainError("input is not a derivation")
    image = phi(theta)
    constant = image.apply(theta.ring.one())
    return image + theta == DiffOp.from_poly(constant)


def transport_via_coordinates(m: RingMap, xi: DiffOp) -> DiffOp:
    """Conjugate the operator by the substitution automorphism of m.

    Requires a linear invertible map.  The conjugate is pinned back into
    normal form by evaluating on all monomials up to the order bound plus
    the coefficient degree plus one and solving the triangular system;
    the surplus rows double as a consistency check (they must solve to
    zero, which the reconstruction verifies).
    """
    ring = xi.ring
    if m.ring != ring:
        raise DomainError("map/operator ring mismatch")
    if not m.is_linear():
        raise DomainError("transport requires a linear map")
    if m.images == ring.gens():
        return xi
    if m.inverse is None:
        rows = m.matrix()
        from .linalg import Matrix

        inv_rows = Matrix(ring.field, rows).inverse().rows
        m = RingMap.from_matrix(ring, rows, inverse_rows=inv_rows)
    if xi.is_zero():
        return xi

    coeff_degree = max(f.degree() for f in xi.terms.values())
    bound = xi.order() + coeff_degree + 1
    values = {}
    for beta in exponents.iter_up_to_degree(ring.nvars, bound):
        pulled = apply_ring_map(m.inverse, ring.monomial(beta))
        values[beta] = apply_ring_map(m, xi.apply(pulled))
    out = operator_from_monomial_values(ring, values)
    if out.order() > xi.order():
        raise DomainError(
            "transport reconstruction exceeded the order bound; "
            "the supplied map is not an order-preserving substitution"
        )
    return out
