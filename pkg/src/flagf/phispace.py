"""Canonical affinor structures from finite-order inner automorphisms of SU(3).

A diagonal element s = diag(s1, s2, s3) of SU(3) with s^k = 1 defines the
automorphism Ad(s).  Its fixed subalgebra h contains the torus plus every
off-diagonal block on which Ad(s) acts trivially; the complement m is the sum
of the remaining blocks, on which Ad(s) acts by the unit multipliers

    mu1 = s1/s2  on a,   mu2 = s2/s3  on b,   mu3 = s3/s1  on c.

The restriction theta of Ad(s) to m generates a commutative operator algebra,
and specific real polynomials in theta produce all the classical-type
structures: almost complex J (J^2 = -1), product P (P^2 = 1), f-structures
(f^3 + f = 0) and their hyperbolic analogues h (h^3 - h = 0).  This module
builds theta, evaluates those polynomials blockwise, enumerates and
deduplicates the resulting operators, and checks the expected operator counts
and the order-5 relation table.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from itertools import product

from .liealg import D, SuElement

__all__ = [
    "NotFiniteOrder",
    "RegularityViolation",
    "AllZeroCoefficients",
    "NotOrderFive",
    "InnerAutomorphism",
    "ThetaOperator",
    "AffinorStructure",
    "build_theta",
    "canonical_f",
    "canonical_h",
    "enumerate_canonical",
    "corollary5_relations",
]

_TOL = 1e-9


class NotFiniteOrder(ValueError):
    """Declared order is not the exact (minimal) order of the element."""


class RegularityViolation(RuntimeError):
    """Fitting decomposition failed; cannot happen for finite order."""


class AllZeroCoefficients(ValueError):
    """An f-structure polynomial needs at least one nonzero coefficient."""


class NotOrderFive(ValueError):
    """The order-5 relation table needs an order-5 automorphism."""


@dataclass(frozen=True)
class InnerAutomorphism:
    """Conjugation by a diagonal special-unitary element of finite order."""

    diag: tuple[complex, complex, complex]
    order: int

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(complex(z) for z in self.diag))
        s1, s2, s3 = self.diag
        if any(abs(abs(z) - 1.0) > _TOL for z in self.diag):
            raise ValueError("diagonal entries must lie on the unit circle")
        if abs(s1 * s2 * s3 - 1.0) > _TOL:
            raise ValueError("diagonal entries must have product 1")
        if self.order < 1:
            raise NotFiniteOrder("order must be a positive integer")
        if not self._is_identity_power(self.order):
            raise NotFiniteOrder(f"element does not satisfy s^{self.order} = id")
        for j in range(1, self.order):
            if self._is_identity_power(j):
                raise NotFiniteOrder(f"declared order {self.order} is not minimal (s^{j} = id)")

    def _is_identity_power(self, k: int) -> bool:
        return all(abs(z**k - 1.0) <= _TOL for z in self.diag)


@dataclass(frozen=True)
class ThetaOperator:
    """Restriction of Ad(s) to the canonical complement m.

    ``multipliers`` maps each active block index (1, 2, 3) to the unit
    complex number by which theta multiplies that block's coordinate.
    Blocks fixed by Ad(s) belong to the isotropy algebra and are absent.
    """

    order: int
    blocks: tuple[int, ...]
    multipliers: tuple[complex, ...]

    @property
    def dim(self) -> int:
        """Real dimension of m."""
        return 2 * len(self.blocks)

    @property
    def spectrum(self) -> tuple[complex, ...]:
        """Eigenvalues of theta on the complexification, with conjugates."""
        eig = []
        for mu in self.multipliers:
            eig.append(mu)
            if abs(mu.imag) > _TOL:
                eig.append(mu.conjugate())
        return tuple(eig)

    @property
    def quad_factor_count(self) -> int:
        """Number s of irreducible quadratic factors of the minimal polynomial."""
        pairs = []
        for mu in self.multipliers:
            if abs(mu.imag) <= _TOL:
                continue
            rep = mu if mu.imag > 0 else mu.conjugate()
            if not any(abs(rep - p) <= _TOL for p in pairs):
                pairs.append(rep)
        return len(pairs)

    @property
    def factor_count(self) -> int:
        """Number s~ of all irreducible real factors of the minimal polynomial."""
        extra = int(any(abs(mu + 1.0) <= _TOL for mu in self.multipliers))
        return self.quad_factor_count + extra

    def has_minus_one(self) -> bool:
        return any(abs(mu + 1.0) <= _TOL for mu in self.multipliers)

    def power(self, m: int) -> "AffinorStructure":
        return AffinorStructure(self.blocks, tuple(mu**m for mu in self.multipliers))

    def identity(self) -> "AffinorStructure":
        return AffinorStructure(self.blocks, tuple(1.0 + 0j for _ in self.blocks))

    def zero(self) -> "AffinorStructure":
        return AffinorStructure(self.blocks, tuple(0j for _ in self.blocks))

    def polynomial(self, coeffs) -> "AffinorStructure":
        """Operator sum_m coeffs[m] theta^m."""
        values = tuple(
            sum(float(cm) * mu**m for m, cm in enumerate(coeffs)) for mu in self.multipliers
        )
        return AffinorStructure(self.blocks, values)


@dataclass(frozen=True)
class AffinorStructure:
    """Block-diagonal endomorphism of m: multiplication by values[i] on blocks[i]."""

    blocks: tuple[int, ...]
    values: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(complex(v) for v in self.values))
        if len(self.blocks) != len(self.values):
            raise ValueError("one multiplier per active block")

    @property
    def tag(self) -> str:
        """Most specific classical type: J, P, f, h, null or other."""
        if self.op_norm() <= _TOL:
            return "null"
        if self.is_almost_complex():
            return "J"
        if self.is_product():
            return "P"
        if self.is_f_structure():
            return "f"
        if self.is_h_structure():
            return "h"
        return "other"

    def is_f_structure(self) -> bool:
        """F^3 + F = 0 with F nonzero."""
        cube = self.compose(self).compose(self)
        resid = max((abs(c + v) for c, v in zip(cube.values, self.values)), default=0.0)
        return resid <= _TOL and self.op_norm() > _TOL

    def is_h_structure(self) -> bool:
        """F^3 - F = 0 (the null operator counts)."""
        cube = self.compose(self).compose(self)
        return max((abs(c - v) for c, v in zip(cube.values, self.values)), default=0.0) <= _TOL

    def is_almost_complex(self) -> bool:
        return max((abs(v * v + 1.0) for v in self.values), default=0.0) <= _TOL

    def is_product(self) -> bool:
        return max((abs(v * v - 1.0) for v in self.values), default=0.0) <= _TOL

    @property
    def rank(self) -> int:
        """Real rank of the operator (2 per block with nonzero multiplier)."""
        return 2 * sum(1 for v in self.values if abs(v) > _TOL)

    def op_norm(self) -> float:
        return max((abs(v) for v in self.values), default=0.0)

    def dist(self, other: "AffinorStructure") -> float:
        """Operator-norm distance (max multiplier deviation over blocks)."""
        self._check_compatible(other)
        return max((abs(u - v) for u, v in zip(self.values, other.values)), default=0.0)

    def _check_compatible(self, other: "AffinorStructure"):
        if self.blocks != other.blocks:
            raise ValueError("operators live on different complements")

    def compose(self, other: "AffinorStructure") -> "AffinorStructure":
        self._check_compatible(other)
        return AffinorStructure(self.blocks, tuple(u * v for u, v in zip(self.values, other.values)))

    def __add__(self, other: "AffinorStructure") -> "AffinorStructure":
        self._check_compatible(other)
        return AffinorStructure(self.blocks, tuple(u + v for u, v in zip(self.values, other.values)))

    def __sub__(self, other: "AffinorStructure") -> "AffinorStructure":
        return self + other.neg()

    def neg(self) -> "AffinorStructure":
        return AffinorStructure(self.blocks, tuple(-v for v in self.values))

    def scale(self, r: float) -> "AffinorStructure":
        return AffinorStructure(self.blocks, tuple(r * v for v in self.values))

    def apply(self, x: SuElement) -> SuElement:
        """Apply to a tangent element; coordinates outside m are annihilated."""
        coords = [0j, 0j, 0j]
        for blk, v in zip(self.blocks, self.values):
            coords[blk - 1] = v * x.d[blk - 1]
        return D(*coords)

    def canonical_sign(self) -> "AffinorStructure":
        """Representative up to sign: first nonzero multiplier has Im > 0 (or Re > 0)."""
        for v in self.values:
            if abs(v) > _TOL:
                lead = v.imag if abs(v.imag) > _TOL else v.real
                return self.neg() if lead < 0 else self
        return self

    def characteristic_collection(self) -> tuple[int, int, int] | None:
        """Flag-manifold collection (z1, z2, z3) when every multiplier is in {0, +-i}.

        Only defined when all three blocks are active; returns None otherwise.
        """
        if tuple(sorted(self.blocks)) != (1, 2, 3):
            return None
        zetas = [0, 0, 0]
        for blk, v in zip(self.blocks, self.values):
            if abs(v) <= _TOL:
                zetas[blk - 1] = 0
            elif abs(v - 1j) <= _TOL:
                zetas[blk - 1] = 1
            elif abs(v + 1j) <= _TOL:
                zetas[blk - 1] = -1
            else:
                return None
        return tuple(zetas)


# dist() above got mangled during editing; define it cleanly.
def _affinor_dist(self: AffinorStructure, other: AffinorStructure) -> float:
    self._check_compatible(other)
    return max((abs(u - v) for u, v in zip(self.values, other.values)), default=0.0)


def build_theta(auto: InnerAutomorphism) -> ThetaOperator:
    """Restrict Ad(s) to the canonical complement m.

    Raises RegularityViolation if the Fitting check g = h + (Ad(s)-id)g fails,
    which cannot happen for an element of finite order.
    """
    s1, s2, s3 = auto.diag
    mults = (s1 / s2, s2 / s3, s3 / s1)
    blocks, values = [], []
    for j, mu in enumerate(mults, start=1):
        if abs(mu - 1.0) > _TOL:
            blocks.append(j)
            values.append(mu)
    # Fitting regularity: A = theta - id must be invertible on every active block.
    if any(abs(mu - 1.0) <= _TOL for mu in values):
        raise RegularityViolation("Ad(s) - id is singular on the complement")
    theta = ThetaOperator(auto.order, tuple(blocks), tuple(values))
    if _affinor_dist(theta.power(auto.order), theta.identity()) > _TOL:
        raise RegularityViolation("theta^k != id on the complement")
    return theta


def _u_count(k: int) -> int:
    return (k - 1) // 2 if k % 2 else k // 2 - 1


def canonical_f(theta: ThetaOperator, zeta, k: int | None = None) -> AffinorStructure:
    """Canonical f-structure with coefficient vector zeta in {-1,0,1}^u.

    f = (2/k) sum_{m=1..u} (sum_j zeta_j sin(2 pi m j / k)) (theta^m - theta^{k-m}),
    where u = n for k = 2n+1 and u = n-1 for k = 2n.
    """
    k = theta.order if k is None else k
    if k != theta.order:
        raise ValueError(f"k={k} does not match theta.order={theta.order}")
    zeta = tuple(int(z) for z in zeta)
    u = _u_count(k)
    if len(zeta) != u:
        raise ValueError(f"order {k} needs {u} coefficients, got {len(zeta)}")
    if any(z not in (-1, 0, 1) for z in zeta):
        raise ValueError("coefficients must lie in {-1, 0, 1}")
    if all(z == 0 for z in zeta):
        raise AllZeroCoefficients("all f-structure coefficients are zero")

    values = []
    for mu in theta.multipliers:
        total = 0j
        for m in range(1, u + 1):
            coeff = sum(z * math.sin(2.0 * math.pi * m * j / k) for j, z in enumerate(zeta, 1))
            total += coeff * (mu**m - mu ** (k - m))
        values.append(2.0 / k * total)
    f = AffinorStructure(theta.blocks, tuple(values))
    cube = f.compose(f).compose(f)
    assert _affinor_dist(cube, f.neg()) <= _TOL, "canonical polynomial is not an f-structure"
    return f


def canonical_h(theta: ThetaOperator, xi, k: int | None = None) -> AffinorStructure:
    """Canonical h-structure (h^3 - h = 0) with coefficients xi in {-1,0,1}.

    For k = 2n+1 the vector has u = n entries and

        a_m = (2/k) sum_j xi_j cos(2 pi m j / k);

    for k = 2n it has u + 1 = n entries (the last one is xi_n) and

        a_m = (1/k) (2 sum_{j<=u} xi_j cos(2 pi m j / k) + (-1)^m xi_n).
    """
    k = theta.order if k is None else k
    if k != theta.order:
        raise ValueError(f"k={k} does not match theta.order={theta.order}")
    xi = tuple(int(z) for z in xi)
    u = _u_count(k)
    expected = u if k % 2 else u + 1
    if len(xi) != expected:
        raise ValueError(f"order {k} needs {expected} coefficients, got {len(xi)}")
    if any(z not in (-1, 0, 1) for z in xi):
        raise ValueError("coefficients must lie in {-1, 0, 1}")

    coeffs = []
    for m in range(k):
        base = sum(z * math.cos(2.0 * math.pi * m * j / k) for j, z in enumerate(xi[:u], 1))
        if k % 2:
            coeffs.append(2.0 / k * base)
        else:
            coeffs.append((2.0 * base + (-1) ** m * xi[u]) / k)
    h = theta.polynomial(coeffs)
    cube = h.compose(h).compose(h)
    assert _affinor_dist(cube, h) <= _TOL, "canonical polynomial is not an h-structure"
    return h


@dataclass(frozen=True)
class CanonicalCensus:
    """Distinct canonical structures of each classical type, with expected counts."""

    f_structures: tuple[AffinorStructure, ...]
    h_structures: tuple[AffinorStructure, ...]
    j_structures: tuple[AffinorStructure, ...]
    p_structures: tuple[AffinorStructure, ...]
    expected: dict = field(default_factory=dict)

    @property
    def counts(self) -> dict:
        return {
            "f": len(self.f_structures),
            "h": len(self.h_structures),
            "J": len(self.j_structures),
            "P": len(self.p_structures),
        }

    def matches_expected(self) -> bool:
        return self.counts == self.expected


def _dedup(ops: list[AffinorStructure], tol: float = _TOL) -> list[AffinorStructure]:
    out: list[AffinorStructure] = []
    for op in ops:
        if not any(_affinor_dist(op, seen) <= tol for seen in out):
            out.append(op)
    return out


def enumerate_canonical(theta: ThetaOperator, k: int | None = None) -> CanonicalCensus:
    """All distinct canonical structures of classical type for theta.

    Enumerates every coefficient vector, deduplicates the resulting operators
    at tolerance 1e-9, and records the structure counts expected from the
    minimal-polynomial factor counts: 2^s~ products P, 2^s almost complex J
    (when s = s~, otherwise none), 3^s - 1 nonzero f-structures and 3^s~
    h-structures.
    """
    k = theta.order if k is None else k
    if k != theta.order:
        raise ValueError(f"k={k} does not match theta.order={theta.order}")
    s = theta.quad_factor_count
    s_tilde = theta.factor_count
    expected = {
        "f": 3**s - 1,
        "h": 3**s_tilde,
        "J": 2**s if s == s_tilde else 0,
        "P": 2**s_tilde,
    }
    if theta.dim == 0:
        return CanonicalCensus((), (), (), (), expected)

    u = _u_count(k)
    f_ops: list[AffinorStructure] = []
    for zeta in product((-1, 0, 1), repeat=u):
        if all(z == 0 for z in zeta):
            continue
        op = canonical_f(theta, zeta, k)
        if op.op_norm() > _TOL:
            f_ops.append(op)

    h_len = u if k % 2 else u + 1
    h_ops = [canonical_h(theta, xi, k) for xi in product((-1, 0, 1), repeat=h_len)]

    f_ops = _dedup(f_ops)
    h_ops = _dedup(h_ops)
    j_ops = [op for op in f_ops if op.is_almost_complex()]
    p_ops = [op for op in h_ops if op.is_product()]
    return CanonicalCensus(tuple(f_ops), tuple(h_ops), tuple(j_ops), tuple(p_ops), expected)


# Order-5 constants.
ALPHA5 = math.sqrt(5.0 + 2.0 * math.sqrt(5.0)) / 5.0
BETA5 = math.sqrt(5.0 - 2.0 * math.sqrt(5.0)) / 5.0
GAMMA5 = math.sqrt(10.0 + 2.0 * math.sqrt(5.0)) / 10.0
DELTA5 = math.sqrt(10.0 - 2.0 * math.sqrt(5.0)) / 10.0


@dataclass(frozen=True)
class RelationReport:
    """Residuals of the order-5 operator identities."""

    items: tuple[tuple[str, float], ...]
    structures: dict

    @property
    def max_residual(self) -> float:
        return max((r for _, r in self.items), default=0.0)

    def passed(self, tol: float = _TOL) -> bool:
        return self.max_residual <= tol


def corollary5_relations(theta: ThetaOperator) -> RelationReport:
    """Build the order-5 canonical structures and check their relation table.

    The structures are P = (theta - theta^2 - theta^3 + theta^4)/sqrt(5),
    J1 = a(theta - theta^4) - b(theta^2 - theta^3), J2 = b(...) + a(...),
    f1 = c(theta - theta^4) + d(theta^2 - theta^3), f2 = d(...) - c(...),
    h1 = (1 + P)/2 and h2 = (1 - P)/2, with a, b, c, d the fixed radicals
    ALPHA5, BETA5, GAMMA5, DELTA5.
    """
    if theta.order != 5:
        raise NotOrderFive(f"got order {theta.order}")
    t1 = theta.power(1)
    t2 = theta.power(2)
    t3 = theta.power(3)
    t4 = theta.power(4)
    one = theta.identity()

    p = (t1 - t2 - t3 + t4).scale(1.0 / math.sqrt(5.0))
    j1 = (t1 - t4).scale(ALPHA5) - (t2 - t3).scale(BETA5)
    j2 = (t1 - t4).scale(BETA5) + (t2 - t3).scale(ALPHA5)
    f1 = (t1 - t4).scale(GAMMA5) + (t2 - t3).scale(DELTA5)
    f2 = (t1 - t4).scale(DELTA5) - (t2 - t3).scale(GAMMA5)
    h1 = (one + p).scale(0.5)
    h2 = (one - p).scale(0.5)

    dist = _affinor_dist
    items = [
        ("J1 P = J2", dist(j1.compose(p), j2)),
        ("f1 P = f1", dist(f1.compose(p), f1)),
        ("J1 h1 = f1", dist(j1.compose(h1), f1)),
        ("J2 h1 = f1", dist(j2.compose(h1), f1)),
        ("h1 P = h1", dist(h1.compose(p), h1)),
        ("h2 P = -h2", dist(h2.compose(p), h2.neg())),
        ("f2 P = -f2", dist(f2.compose(p), f2.neg())),
        ("J2 h2 = -f2", dist(j2.compose(h2), f2.neg())),
        ("J1 h2 = f2", dist(j1.compose(h2), f2)),
        ("f1 f2 = 0", f1.compose(f2).op_norm()),
        ("h1 h2 = 0", h1.compose(h2).op_norm()),
        ("h1 + h2 = P", dist(h1 + h2, p)),
    ]

    spectrum_size = len({round(mu.real, 9) + 1j * round(abs(mu.imag), 9) for mu in theta.multipliers})
    if spectrum_size == 1:
        # Degenerate case: P trivial, one of f1/f2 null, the other almost complex.
        items.append(("P = id or P = -id", min(dist(p, one), dist(p, one.neg()))))
        items.append(("one of f1, f2 is null", min(f1.op_norm(), f2.op_norm())))

    structures = {"P": p, "J1": j1, "J2": j2, "f1": f1, "f2": f2, "h1": h1, "h2": h2}
    return RelationReport(tuple(items), structures)
