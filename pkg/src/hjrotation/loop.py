"""Cyclic sequences of primitive vectors and their per-edge invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .contfrac import HJExpansion, hj_expand
from .lattice import LatticeVector, Mat2, det2, ext_gcd, gcd, is_primitive, sign


class InvalidLoopError(ValueError):
    """Base class for rejected vertex sequences.

    ``index`` is 1-based, matching the usual v_1, ..., v_d numbering.
    """

    index: int | None = None


class LoopTooShortError(InvalidLoopError):
    def __init__(self, d: int):
        super().__init__(f"a loop needs at least 2 vertices, got {d}")
        self.d = d


class NonPrimitiveVertexError(InvalidLoopError):
    def __init__(self, index: int, v: LatticeVector):
        super().__init__(f"vertex {index} {v!r} is not primitive (gcd {gcd(v.x, v.y)})")
        self.index = index
        self.vertex = v


class ZeroDeterminantError(InvalidLoopError):
    def __init__(self, index: int, u: LatticeVector, w: LatticeVector):
        super().__init__(f"edge {index} from {u!r} to {w!r} has zero determinant")
        self.index = index
        self.edge = (u, w)


@dataclass(frozen=True)
class VectorLoop:
    vertices: tuple[LatticeVector, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> LatticeVector:
        """Cyclic 0-based access: ``loop[-1]`` is the last vertex, ``loop[d]`` the first."""
        return self.vertices[i % len(self.vertices)]

    def __iter__(self):
        return iter(self.vertices)

    def edges(self) -> Iterable[tuple[LatticeVector, LatticeVector]]:
        d = len(self.vertices)
        for i in range(d):
            yield self.vertices[i], self.vertices[(i + 1) % d]

    def epsilons(self) -> list[int]:
        return [det2(u, w) for u, w in self.edges()]

    def is_unimodular(self) -> bool:
        return all(abs(e) == 1 for e in self.epsilons())

    def reversed(self) -> VectorLoop:
        return VectorLoop(tuple(reversed(self.vertices)))


def validate_loop(vertices: Sequence) -> VectorLoop:
    """Build a :class:`VectorLoop`, raising a specific error for the first defect found.

    Zero-determinant edges are reported before non-primitive vertices.
    """
    vs = tuple(v if isinstance(v, LatticeVector) else LatticeVector(*v) for v in vertices)
    if len(vs) < 2:
        raise LoopTooShortError(len(vs))
    d = len(vs)
    for i in range(d):
        u, w = vs[i], vs[(i + 1) % d]
        if det2(u, w) == 0:
            raise ZeroDeterminantError(i + 1, u, w)
    for i, v in enumerate(vs, start=1):
        if not is_primitive(v):
            raise NonPrimitiveVertexError(i, v)
    return VectorLoop(vs)


def edge_normalization(
    u: LatticeVector, w: LatticeVector, bezout: tuple[int, int] | None = None
) -> tuple[int, Mat2]:
    """Return ``(x, P)`` with P unimodular and ``(u, w) = P @ [[1, -x], [0, |det|]]``.

    ``u`` is first sent to ``(1, 0)`` by ``[[p, q], [s*(-b), s*a]]`` where
    ``a*p + b*q = 1`` and ``s`` is the sign of ``det(u, w)``; this makes the
    image of ``w`` have second coordinate ``|det|``. A shear then moves the
    first coordinate into ``(-|det|, 0]``. ``bezout`` overrides the ``(p, q)``
    pair; x does not depend on that choice.
    """
    eps = det2(u, w)
    if eps == 0:
        raise ZeroDeterminantError(1, u, w)
    m = abs(eps)
    s = sign(eps)
    a, b = u.x, u.y
    if bezout is None:
        g, p, q = ext_gcd(a, b)
        if g != 1:
            raise NonPrimitiveVertexError(1, u)
    else:
        p, q = bezout
        if a * p + b * q != 1:
            raise ValueError(f"({p}, {q}) is not a Bezout pair for {u!r}")
    R = Mat2(p, q, -s * b, s * a)
    top, bottom = R @ w
    assert bottom == m
    # n = -ceil(top/m) is the unique n with -m < top + n*m <= 0
    n = (-top) // m
    x = -(top + n * m)
    P_inv = Mat2(1, n, 0, 1) @ R
    return x, P_inv.inverse()


@dataclass(frozen=True)
class EdgeAnalysis:
    """Invariants of the edge from v_i to v_{i+1} (``index`` is 1-based)."""

    index: int
    epsilon: int
    a: Fraction
    x: int
    y: int
    P: Mat2
    Q: Mat2
    hj: HJExpansion | None

    @property
    def terms(self) -> tuple[int, ...]:
        return self.hj.terms if self.hj is not None else ()

    @property
    def l(self) -> int:
        return len(self.terms)

    @property
    def orientation(self) -> int:
        return sign(self.epsilon)


def compute_a(prev: LatticeVector, cur: LatticeVector, nxt: LatticeVector) -> Fraction:
    """Coefficient a with ``prev/det(prev, cur) + nxt/det(cur, nxt) + a*cur = 0``."""
    return Fraction(det2(nxt, prev), det2(prev, cur) * det2(cur, nxt))


def analyze_edge(loop: VectorLoop, i: int) -> EdgeAnalysis:
    """Analyse edge ``i`` (0-based) of ``loop``."""
    prev, cur, nxt = loop[i - 1], loop[i], loop[i + 1]
    eps = det2(cur, nxt)
    x, P = edge_normalization(cur, nxt)
    y, Q = edge_normalization(nxt, cur)
    hj = hj_expand(abs(eps), x) if abs(eps) >= 2 else None
    return EdgeAnalysis(
        index=i + 1,
        epsilon=eps,
        a=compute_a(prev, cur, nxt),
        x=x,
        y=y,
        P=P,
        Q=Q,
        hj=hj,
    )


def analyze_loop(loop: VectorLoop) -> list[EdgeAnalysis]:
    return [analyze_edge(loop, i) for i in range(len(loop))]
