import random
from fractions import Fraction

from vertexlab.fock.state import FockMonomial, FockState, accumulate
from vertexlab.lattice.context import LatticeContext, LatticePoint


def _labels(lattice: LatticeContext, max_degree: int, radius: int) -> list[LatticePoint]:
    """Lattice points with coordinates in [-radius, radius] and ½(β|β) in [0, max_degree]."""
    points: list[LatticePoint] = [()]
    for _ in range(lattice.rank):
        points = [(*p, x) for p in points for x in range(-radius, radius + 1)]
    return [p for p in points if 0 <= lattice.norm(p) / 2 <= max_degree]


def random_monomial(
    lattice: LatticeContext,
    max_degree: int,
    rng: random.Random,
    radius: int = 1,
) -> FockState:
    """A random monomial of degree at most `max_degree`."""
    label = rng.choice(_labels(lattice, max_degree, radius))
    budget = int(max_degree - lattice.norm(label) / 2)
    depth = rng.randint(0, budget)

    modes: list[tuple[int, int]] = []
    while depth:
        n = rng.randint(1, depth)
        modes.append((-n, rng.randrange(lattice.rank)))
        depth -= n

    return FockState(lattice, {FockMonomial(tuple(sorted(modes)), label): 1})


def random_homogeneous(
    lattice: LatticeContext,
    max_degree: int,
    rng: random.Random,
    width: int = 2,
) -> FockState:
    """A random combination of up to `width` monomials sharing label and degree."""
    first = random_monomial(lattice, max_degree, rng)
    (mono, _), = first.terms.items()
    terms = {mono: Fraction(rng.choice([1, 2, -1, -3]))}
    for _ in range(width - 1):
        modes: list[tuple[int, int]] = []
        depth = mono.depth
        while depth:
            n = rng.randint(1, depth)
            modes.append((-n, rng.randrange(lattice.rank)))
            depth -= n
        other = FockMonomial(tuple(sorted(modes)), mono.label)
        accumulate(terms, {other: Fraction(1)}, Fraction(rng.randint(-2, 2)))
    return FockState(lattice, terms) if terms else first
