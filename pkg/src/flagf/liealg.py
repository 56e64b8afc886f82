"""su(3) in block coordinates.

An element is written E(alpha1, alpha2, alpha3) + D(a, b, c), i.e. the matrix

    [[alpha1,   a,       conj(c)],
     [-conj(a), alpha2,  b      ],
     [-c,       -conj(b), alpha3]]

with the alpha_j purely imaginary and summing to zero.  The diagonal part
E(...) spans the isotropy algebra h of the full flag quotient (the maximal
torus), and the off-diagonal part D(...) spans its orthogonal complement

    m = m1 + m2 + m3,   m1 = D(a,0,0),  m2 = D(0,b,0),  m3 = D(0,0,c).

Tangent vectors to the flag manifold at the base point are exactly the
elements with zero isotropy part; ``D(a, b, c)`` builds them directly.

Everything here is pure and immutable.  The bracket is implemented in the
closed coordinate form and cross-checked against the 3x3 matrix commutator
in the test suite (and available as :func:`bracket_mat` for that purpose).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SuElement",
    "E",
    "D",
    "BASIS_M",
    "bracket",
    "bracket_mat",
    "killing_inner",
    "norm",
    "project",
    "block_of",
    "random_tangent",
    "random_element",
]

_IMAG_TOL = 1e-9


@dataclass(frozen=True)
class SuElement:
    """Element of su(3), stored as (alpha1, alpha2, a, b, c); alpha3 is derived."""

    alpha1: complex
    alpha2: complex
    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "a", "b", "c"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        scale = max(1.0, abs(self.alpha1), abs(self.alpha2))
        if abs(self.alpha1.real) > _IMAG_TOL * scale or abs(self.alpha2.real) > _IMAG_TOL * scale:
            raise ValueError("isotropy coordinates must be purely imaginary")

    @property
    def alpha3(self) -> complex:
        return -self.alpha1 - self.alpha2

    @property
    def d(self) -> tuple[complex, complex, complex]:
        """Tangent (off-diagonal) coordinates (a, b, c)."""
        return (self.a, self.b, self.c)

    def is_tangent(self, tol: float = 1e-12) -> bool:
        scale = max(1.0, abs(self.a), abs(self.b), abs(self.c))
        return abs(self.alpha1) <= tol * scale and abs(self.alpha2) <= tol * scale

    def __add__(self, other: "SuElement") -> "SuElement":
        return SuElement(
            self.alpha1 + other.alpha1,
            self.alpha2 + other.alpha2,
            self.a + other.a,
            self.b + other.b,
            self.c + other.c,
        )

    def __sub__(self, other: "SuElement") -> "SuElement":
        return self + (-other)

    def __neg__(self) -> "SuElement":
        return SuElement(-self.alpha1, -self.alpha2, -self.a, -self.b, -self.c)

    def __rmul__(self, scalar) -> "SuElement":
        scalar = complex(scalar)
        if abs(scalar.imag) > 0 and not self.is_tangent():
            raise ValueError("complex scaling is only defined on tangent elements")
        if abs(scalar.imag) > 0:
            return D(scalar * self.a, scalar * self.b, scalar * self.c)
        r = scalar.real
        return SuElement(r * self.alpha1, r * self.alpha2, r * self.a, r * self.b, r * self.c)

    __mul__ = __rmul__

    def mat(self) -> np.ndarray:
        """Reconstruct the 3x3 anti-Hermitian matrix."""
        a, b, c = self.a, self.b, self.c
        return np.array(
            [
                [self.alpha1, a, np.conj(c)],
                [-np.conj(a), self.alpha2, b],
                [-c, -np.conj(b), self.alpha3],
            ],
            dtype=complex,
        )

    @staticmethod
    def from_mat(m: np.ndarray, tol: float = 1e-9) -> "SuElement":
        m = np.asarray(m, dtype=complex)
        if m.shape != (3, 3):
            raise ValueError("expected a 3x3 matrix")
        scale = max(1.0, float(np.abs(m).max()))
        if np.abs(m + m.conj().T).max() > tol * scale:
            raise ValueError("matrix is not anti-Hermitian")
        if abs(np.trace(m)) > tol * scale:
            raise ValueError("matrix is not traceless")
        return SuElement(
            1j * m[0, 0].imag, 1j * m[1, 1].imag, m[0, 1], m[1, 2], -m[2, 0]
        )


def E(alpha1: complex, alpha2: complex, alpha3: complex) -> SuElement:
    """Isotropy (diagonal) element; requires alpha1 + alpha2 + alpha3 = 0."""
    total = complex(alpha1) + complex(alpha2) + complex(alpha3)
    scale = max(1.0, abs(alpha1), abs(alpha2), abs(alpha3))
    if abs(total) > _IMAG_TOL * scale:
        raise ValueError("diagonal entries must sum to zero")
    return SuElement(alpha1, alpha2, 0, 0, 0)


def D(a: complex, b: complex, c: complex) -> SuElement:
    """Tangent element with block coordinates (a, b, c)."""
    return SuElement(0, 0, a, b, c)


#: Standard real basis of m, block by block.
BASIS_M = (
    D(1, 0, 0),
    D(1j, 0, 0),
    D(0, 1, 0),
    D(0, 1j, 0),
    D(0, 0, 1),
    D(0, 0, 1j),
)

#: Block index (1, 2, 3) of each BASIS_M entry.
BASIS_BLOCKS = (1, 1, 2, 2, 3, 3)


def bracket_d(x: tuple[complex, complex, complex],
              y: tuple[complex, complex, complex]) -> tuple[complex, complex, complex]:
    """m-part of the bracket of two tangent elements, on raw coordinates."""
    a, b, c = x
    a1, b1, c1 = y
    return (
        (b * c1 - b1 * c).conjugate(),
        (c * a1 - c1 * a).conjugate(),
        (a * b1 - a1 * b).conjugate(),
    )


def bracket(x: SuElement, y: SuElement) -> SuElement:
    """Lie bracket in closed coordinate form.

    For pure tangent arguments X = D(a,b,c), Y = D(a1,b1,c1):

        [X,Y] = D(conj(b c1 - b1 c), conj(c a1 - c1 a), conj(a b1 - a1 b))
                - 2E(i Im(a conj(a1) + conj(c) c1),
                     i Im(conj(a) a1 + b conj(b1)),
                     i Im(c conj(c1) + conj(b) b1))

    and for a diagonal Z = E(alpha1, alpha2, alpha3):

        [Z,X] = D((alpha1-alpha2) a, (alpha2-alpha3) b, (alpha3-alpha1) c).

    Diagonal elements commute with each other.
    """
    a, b, c = x.a, x.b, x.c
    a1, b1, c1 = y.a, y.b, y.c

    # D x D part
    da = (b * c1 - b1 * c).conjugate()
    db = (c * a1 - c1 * a).conjugate()
    dc = (a * b1 - a1 * b).conjugate()
    e1 = -2j * (a * a1.conjugate() + c.conjugate() * c1).imag
    e2 = -2j * (a.conjugate() * a1 + b * b1.conjugate()).imag

    # E x D parts: [E_x, D_y] - [E_y, D_x]
    xa1, xa2, xa3 = x.alpha1, x.alpha2, x.alpha3
    ya1, ya2, ya3 = y.alpha1, y.alpha2, y.alpha3
    da += (xa1 - xa2) * a1 - (ya1 - ya2) * a
    db += (xa2 - xa3) * b1 - (ya2 - ya3) * b
    dc += (xa3 - xa1) * c1 - (ya3 - ya1) * c

    return SuElement(e1, e2, da, db, dc)


def bracket_mat(x: SuElement, y: SuElement) -> SuElement:
    """Bracket via the 3x3 matrix commutator; oracle for :func:`bracket`."""
    mx, my = x.mat(), y.mat()
    return SuElement.from_mat(mx @ my - my @ mx)


def killing_inner(x: SuElement, y: SuElement) -> float:
    """Invariant inner product -(1/2) Re tr(XY); positive definite on su(3)."""
    d_term = (x.a * y.a.conjugate() + x.b * y.b.conjugate() + x.c * y.c.conjugate()).real
    e_term = (x.alpha1 * y.alpha1 + x.alpha2 * y.alpha2 + x.alpha3 * y.alpha3).real
    return d_term - 0.5 * e_term


def norm(x: SuElement) -> float:
    return math.sqrt(max(killing_inner(x, x), 0.0))


_PARTS = ("h", "m1", "m2", "m3")


def project(x: SuElement, part: str) -> SuElement:
    """Orthogonal projection onto h, m1, m2 or m3."""
    if part == "h":
        return SuElement(x.alpha1, x.alpha2, 0, 0, 0)
    if part == "m1":
        return D(x.a, 0, 0)
    if part == "m2":
        return D(0, x.b, 0)
    if part == "m3":
        return D(0, 0, x.c)
    raise ValueError(f"unknown part {part!r}; expected one of {_PARTS}")


def project_m(x: SuElement) -> SuElement:
    """Projection onto the full tangent space m."""
    return D(x.a, x.b, x.c)


def block_of(x: SuElement, tol: float = 1e-12) -> int | None:
    """Index j of the single block m_j containing x, or None if mixed/zero."""
    nz = [j for j, comp in enumerate((x.a, x.b, x.c), start=1) if abs(comp) > tol]
    return nz[0] if len(nz) == 1 else None


def _disk(rng: np.random.Generator) -> complex:
    r = math.sqrt(rng.random())
    phi = 2.0 * math.pi * rng.random()
    return complex(r * math.cos(phi), r * math.sin(phi))


def random_tangent(rng: np.random.Generator) -> SuElement:
    """Tangent element with coordinates uniform on the complex unit disk."""
    return D(_disk(rng), _disk(rng), _disk(rng))


def random_element(rng: np.random.Generator) -> SuElement:
    """Full su(3) element: random tangent part plus random isotropy part."""
    t1 = rng.uniform(-1.0, 1.0)
    t2 = rng.uniform(-1.0, 1.0)
    return SuElement(1j * t1, 1j * t2, _disk(rng), _disk(rng), _disk(rng))
