"""Rejection sampling of random valid loops."""

from __future__ import annotations

import random

from .lattice import LatticeVector, det2, is_primitive
from .loop import VectorLoop

MAX_STEP_ATTEMPTS = 1000


def random_primitive(rng: random.Random, bound: int) -> LatticeVector:
    while True:
        v = LatticeVector(rng.randint(-bound, bound), rng.randint(-bound, bound))
        if is_primitive(v):
            return v


def random_loop(rng: random.Random, d: int, bound: int) -> VectorLoop:
    """Uniform coordinates in ``[-bound, bound]``, rejecting bad vertices.

    A vertex is redrawn when it is not primitive or is parallel to its
    predecessor (the last one also against the first). If a vertex cannot be
    placed after ``MAX_STEP_ATTEMPTS`` draws the whole loop is redrawn.
    """
    if d < 2:
        raise ValueError(f"loop length must be at least 2, got {d}")
    if bound < 1:
        raise ValueError(f"coordinate bound must be at least 1, got {bound}")
    while True:
        vertices = [random_primitive(rng, bound)]
        for k in range(1, d):
            last = k == d - 1
            for _ in range(MAX_STEP_ATTEMPTS):
                v = random_primitive(rng, bound)
                if det2(vertices[-1], v) == 0:
                    continue
                if last and det2(v, vertices[0]) == 0:
                    continue
                vertices.append(v)
                break
            else:
                break
        if len(vertices) == d:
            return VectorLoop(tuple(vertices))


def random_loops(seed: int, count: int, max_d: int, bound: int, min_d: int = 2):
    """Yield ``count`` loops with lengths uniform in ``[min_d, max_d]``."""
    if max_d < min_d:
        raise ValueError(f"max_d={max_d} is below the minimum loop length {min_d}")
    rng = random.Random(seed)
    for _ in range(count):
        yield random_loop(rng, rng.randint(min_d, max_d), bound)
