"""Unimodular refinement: insert lattice vectors between v_i and v_{i+1}.

For an edge with expansion ``|eps|/x = [n_1, ..., n_l]`` the inserted vectors are
``w_j = P @ M_1 @ ... @ M_j @ (1, 0)`` for ``j = 1..l`` with
``M_k = [[0, -1], [1, n_k]]``. Consecutive vectors of the chain
``v_i = w_0, w_1, ..., w_{l+1} = v_{i+1}`` all have determinant ``sign(eps)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contfrac import elementary_hj
from .lattice import LatticeVector, Mat2
from .loop import EdgeAnalysis, VectorLoop, analyze_loop

E1 = LatticeVector(1, 0)
E2 = LatticeVector(0, 1)


class RefinementConsistencyError(AssertionError):
    """The two formulas for an inserted vector disagree; this is a bug, not bad input."""


def prefix_products(P: Mat2, terms) -> list[Mat2]:
    """``[P, P@M_1, P@M_1@M_2, ...]``, one entry per prefix of ``terms``."""
    out = [P]
    for n in terms:
        out.append(out[-1] @ elementary_hj(n))
    return out


def refine_edge(edge: EdgeAnalysis) -> list[LatticeVector]:
    prefixes = prefix_products(edge.P, edge.terms)
    inserted = []
    for j in range(1, edge.l + 1):
        w = prefixes[j] @ E1
        if w != prefixes[j - 1] @ E2:
            raise RefinementConsistencyError(
                f"edge {edge.index}: inserted vector {j} differs between its two forms"
            )
        inserted.append(w)
    return inserted


@dataclass(frozen=True)
class UnimodularRefinement:
    original: VectorLoop
    edges: tuple[EdgeAnalysis, ...]
    inserted: tuple[tuple[LatticeVector, ...], ...]
    enlarged: VectorLoop
    # provenance[k] = (original edge index, position j); j = 0 marks an original vertex
    provenance: tuple[tuple[int, int], ...]

    def chain(self, i: int) -> list[LatticeVector]:
        """``[w_0, ..., w_{l+1}]`` for original edge ``i`` (1-based)."""
        d = len(self.original)
        return [self.original[i - 1], *self.inserted[i - 1], self.original[i % d]]


def refine_loop(loop: VectorLoop, edges: list[EdgeAnalysis] | None = None) -> UnimodularRefinement:
    if edges is None:
        edges = analyze_loop(loop)
    inserted = tuple(tuple(refine_edge(e)) for e in edges)
    vertices = []
    provenance = []
    for i, (v, ws) in enumerate(zip(loop, inserted), start=1):
        vertices.append(v)
        provenance.append((i, 0))
        for j, w in enumerate(ws, start=1):
            vertices.append(w)
            provenance.append((i, j))
    return UnimodularRefinement(
        original=loop,
        edges=tuple(edges),
        inserted=inserted,
        enlarged=VectorLoop(tuple(vertices)),
        provenance=tuple(provenance),
    )
