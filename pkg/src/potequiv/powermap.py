"""Exact experiments with the power map on a non-identity component.

Two demos: the normalizer of the diagonal torus in SL2, where squaring
collapses the component xJ onto -I, and SL2 x SL2 with the block swap,
where ((g, 1)J)^2 = (g, g) exhibits every diagonal element as an image.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import ContractError, DimensionError, Matrix

DEFAULT_SEED = 20240611


def coset_power_identity(x: Matrix, J: Matrix, m: int) -> bool:
    """(xJ)^m == x theta(x) ... theta^(m-1)(x) J^m with theta(y) = J y J^-1."""
    if x.shape != J.shape or not x.is_square():
        raise DimensionError("x and J must be square of the same size")
    if x.det() == 0 or J.det() == 0:
        raise ContractError("x and J must be invertible")
    lhs = (x * J) ** m
    Jinv = J.inverse()
    rhs = Matrix.identity(x.nrows)
    conj = x
    for _ in range(m):
        rhs = rhs * conj
        conj = J * conj * Jinv
    return lhs == rhs * J**m


@dataclass
class ComponentSpec:
    """A component G0*J of an algebraic group, sampled through G0."""

    dimension: int
    sampler: Callable[[random.Random], Matrix]
    J: Matrix
    m: int
    member: Callable[[Matrix], bool]

    def check_normalizes(self, x: Matrix) -> bool:
        return self.member(self.J * x * self.J.inverse())


@dataclass
class PowerMapReport:
    samples: int
    distinct_images: int
    collapse: bool
    witnessed_neighborhood: list = field(default_factory=list)
    witnesses_verified: int = 0

    def kv_lines(self) -> list[str]:
        return [
            f"@samples={self.samples}",
            f"@distinct_images={self.distinct_images}",
            f"@collapse={str(self.collapse).lower()}",
            f"@witnesses_verified={self.witnesses_verified}",
        ]


def power_images(spec: ComponentSpec, count: int, rng: random.Random) -> list[Matrix]:
    images = []
    for _ in range(count):
        x = spec.sampler(rng)
        assert spec.member(x), "sampler left G0"
        assert spec.check_normalizes(x), "J does not normalize G0 at a sample"
        images.append((x * spec.J) ** spec.m)
    return images


# --- Example: normalizer of the diagonal torus in SL2 ---------------------

TORUS_J = Matrix([[0, 1], [-1, 0]])


def _random_unit(rng: random.Random, height: int = 50) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-height, height)
    return Fraction(num, rng.randint(1, height))


def torus_spec() -> ComponentSpec:
    def sampler(rng):
        t = _random_unit(rng)
        return Matrix.diag([t, 1 / t])

    def member(x):
        return x[0, 1] == 0 and x[1, 0] == 0 and x.det() == 1

    return ComponentSpec(2, sampler, TORUS_J, 2, member)


def torus_collapse_demo(sample_count: int, seed: int = DEFAULT_SEED) -> PowerMapReport:
    spec = torus_spec()
    rng = random.Random(seed)
    images = power_images(spec, sample_count, rng)
    minus_one = -Matrix.identity(2)
    assert all(w == minus_one for w in images), "square of a coset element is not -I"
    distinct = list(dict.fromkeys(images))
    return PowerMapReport(sample_count, len(distinct), len(distinct) == 1, distinct, len(images))


def fourth_power_traces(sample_count: int, seed: int = DEFAULT_SEED) -> list[tuple]:
    """(Tr trivial(w)^4, Tr natural(w)^4) for sampled w in the non-identity component."""
    spec = torus_spec()
    rng = random.Random(seed)
    out = []
    for _ in range(sample_count):
        w = spec.sampler(rng) * spec.J
        out.append((Matrix.identity(2).trace(), (w**4).trace()))
    return out


# --- Non-collapse witness: SL2 x SL2 with the swap -----------------------

SWAP_J = Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])


def block_diag(x: Matrix, y: Matrix) -> Matrix:
    return Matrix([list(x.row(0)) + [0, 0], list(x.row(1)) + [0, 0],
                   [0, 0] + list(y.row(0)), [0, 0] + list(y.row(1))])


def blocks(w: Matrix) -> tuple[Matrix, Matrix] | None:
    """(x, y) when w is block diagonal, else None."""
    if any(w[i, j] for i in (0, 1) for j in (2, 3)) or any(w[i, j] for i in (2, 3) for j in (0, 1)):
        return None
    return (Matrix([[w[0, 0], w[0, 1]], [w[1, 0], w[1, 1]]]),
            Matrix([[w[2, 2], w[2, 3]], [w[3, 2], w[3, 3]]]))


def random_sl2(rng: random.Random, length: int = 6, height: int = 5) -> Matrix:
    """Product of random elementary matrices; determinant exactly 1."""
    g = Matrix.identity(2)
    for i in range(length):
        s = rng.randint(-height, height)
        g = g * (Matrix([[1, s], [0, 1]]) if i % 2 == 0 else Matrix([[1, 0], [s, 1]]))
    return g


def _in_sl2_pair(w: Matrix) -> bool:
    b = blocks(w)
    return b is not None and b[0].det() == 1 and b[1].det() == 1


def swap_spec() -> ComponentSpec:
    return ComponentSpec(4, lambda rng: block_diag(random_sl2(rng), random_sl2(rng)), SWAP_J, 2, _in_sl2_pair)


def in_swap_coset(w: Matrix) -> bool:
    """w lies in G0 * J: w * J^-1 is a pair of SL2 blocks."""
    return _in_sl2_pair(w * SWAP_J.inverse())


def semisimple_noncollapse_demo(sample_count: int, seed: int = DEFAULT_SEED) -> PowerMapReport:
    """Sample distinct g in SL2 and verify ((g, 1)J)^2 = (g, g) exactly."""
    rng = random.Random(seed)
    ident = Matrix.identity(2)
    sampled: set[Matrix] = set()
    seen: dict[Matrix, None] = {}
    witnesses = 0
    attempts = 0
    while len(seen) < sample_count:
        attempts += 1
        if attempts > 100 * sample_count + 100:
            raise RuntimeError("sampler keeps repeating SL2 elements")
        g = random_sl2(rng)
        if g in sampled:
            continue
        sampled.add(g)
        pre = block_diag(g, ident) * SWAP_J
        assert in_swap_coset(pre), "preimage is not in the non-identity component"
        image = pre ** 2
        assert image == block_diag(g, g), "((g,1)J)^2 != (g,g)"
        witnesses += 1
        seen[image] = None
    # generic coset elements square to (xy, yx)
    for _ in range(min(sample_count, 20)):
        x, y = random_sl2(rng), random_sl2(rng)
        assert (block_diag(x, y) * SWAP_J) ** 2 == block_diag(x * y, y * x)
    images = list(seen)
    return PowerMapReport(sample_count, len(images), len(images) == 1, images, witnesses)
