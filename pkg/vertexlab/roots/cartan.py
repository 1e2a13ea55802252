"""Classification of finite root systems in positive definite lattices.

An indecomposable finite conformal root system in a positive definite
lattice is one of the following, with norms of short, long and extra-long
roots 1, 2 and 4:

- a simply-laced Cartan root system A, D, E with all roots of norm 2,
- B(n) with short roots of norm 1 and long roots of norm 2,
- C(n) with short roots of norm 2 and long roots of norm 4,
- BC(n), the union of B(n) and C(n),
- B0(n), the short roots ±α_i of B(n) for an orthonormal α_1..α_n together
  with the long roots of the form α_i - α_j,
- B1prime, the two roots of norm 3 in rank 1.

Types G2 and F4 and every other geometry are rejected.
"""

import itertools
import typing as t

import sympy

from vertexlab.base.exceptions import RootSystemError
from vertexlab.base.log import get_logger
from vertexlab.lattice.context import Definiteness, LatticeContext, LatticePoint, add, neg
from vertexlab.roots.system import ClosureStatus, RootSystem
from vertexlab.roots.tables import B1_PRIME, ClassificationLabel

log = get_logger(__name__)

_CARTAN_DETERMINANTS: dict[str, t.Callable[[int], int]] = {
    "A": lambda n: n + 1,
    "B": lambda n: 2,
    "C": lambda n: 2,
    "D": lambda n: 4,
    "E": lambda n: 9 - n,
    "F": lambda n: 1,
    "G": lambda n: 1,
}

_ROOT_COUNTS: dict[str, t.Callable[[int], int]] = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
}


def components(delta: RootSystem) -> list[RootSystem]:
    """Split Δ into indecomposable parts.

    Roots are joined when they are not orthogonal, when their sum is a root,
    or when they are opposite.
    """
    roots = sorted(delta.roots)
    parent = {r: r for r in roots}

    def find(r: LatticePoint) -> LatticePoint:
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        return r

    def join(a: LatticePoint, b: LatticePoint) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for a, b in itertools.combinations(roots, 2):
        if b == neg(a) or delta.lattice.inner(a, b) or add(a, b) in delta.roots:
            join(a, b)

    parts: dict[LatticePoint, list[LatticePoint]] = {}
    for r in roots:
        parts.setdefault(find(r), []).append(r)
    return [
        RootSystem.of(delta.lattice, part, status=delta.status, window=delta.window)
        for part in sorted(parts.values())
    ]


def _functional(roots: t.Sequence[LatticePoint]) -> t.Callable[[LatticePoint], int]:
    """A linear functional that vanishes on no nonzero integer combination in play."""
    base = 4 * max(abs(x) for r in roots for x in r) + 1
    return lambda r: sum(x * base**i for i, x in enumerate(r))


def simple_system(roots: t.Sequence[LatticePoint]) -> list[LatticePoint]:
    """Positive roots that are not a sum of two positive roots."""
    f = _functional(roots)
    positive = [r for r in roots if f(r) > 0]
    sums = {add(a, b) for a in positive for b in positive}
    return sorted(r for r in positive if r not in sums)


def cartan_matrix(
    simple: t.Sequence[LatticePoint], lattice: LatticeContext
) -> list[list[int]]:
    """Entries 2(α_i|α_j)/(α_i|α_i)."""
    out = []
    for a in simple:
        row = []
        for b in simple:
            value = 2 * lattice.inner(a, b) / lattice.norm(a)
            if value.denominator != 1:
                msg = f"Cartan integer of {a}, {b} is not integral"
                raise RootSystemError(msg)
            row.append(int(value))
        out.append(row)
    return out


def dynkin_type(cartan: t.Sequence[t.Sequence[int]]) -> tuple[str, int]:
    """Identify a finite type Cartan matrix from its Dynkin diagram.

    Doubly laced chains with the double bond at an end are reported as "B";
    telling B from C is left to the caller, who knows the root norms.

    Raises
    ------
    RootSystemError
        If the diagram is not of finite type
    """
    n = len(cartan)
    bonds = {
        (i, j): cartan[i][j] * cartan[j][i]
        for i in range(n)
        for j in range(i + 1, n)
        if cartan[i][j]
    }
    if any(m > 3 for m in bonds.values()) or len(bonds) != n - 1:
        raise RootSystemError(f"Cartan matrix {cartan} is not of finite type")
    neighbours: dict[int, list[int]] = {i: [] for i in range(n)}
    for i, j in bonds:
        neighbours[i].append(j)
        neighbours[j].append(i)
    degrees = sorted(len(v) for v in neighbours.values())

    if 3 in bonds.values():
        kind = "G"
    elif 2 in bonds.values():
        (i, j) = next(k for k, m in bonds.items() if m == 2)
        at_end = len(neighbours[i]) == 1 or len(neighbours[j]) == 1
        kind = "B" if at_end and degrees[-1] <= 2 else "F"
    elif degrees[-1] <= 2:
        kind = "A"
    elif degrees.count(3) == 1 and degrees[-1] == 3:
        kind = _branched(neighbours)
    else:
        raise RootSystemError(f"Cartan matrix {cartan} is not of finite type")

    exceptional = {"F": 4, "G": 2}
    if kind in exceptional and n != exceptional[kind]:
        raise RootSystemError(f"Cartan matrix {cartan} is not of finite type")
    if int(sympy.Matrix(cartan).det()) != _CARTAN_DETERMINANTS[kind](n):
        raise RootSystemError(f"Cartan matrix {cartan} is not of finite type")
    return kind, n


def _branched(neighbours: dict[int, list[int]]) -> str:
    centre = next(i for i, v in neighbours.items() if len(v) == 3)
    legs = []
    for start in neighbours[centre]:
        length, previous, node = 1, centre, start
        while len(neighbours[node]) == 2:
            previous, node = node, next(x for x in neighbours[node] if x != previous)
            length += 1
        legs.append(length)
    legs.sort()
    if legs[:2] == [1, 1]:
        return "D"
    if legs[:2] == [1, 2] and legs[2] in (2, 3, 4):
        return "E"
    raise RootSystemError(f"Dynkin diagram with legs {legs} is not of finite type")


def _span_rank(roots: t.Sequence[LatticePoint]) -> int:
    return int(sympy.Matrix([list(r) for r in roots]).rank())


def _rank1(norms: set[int], count: int) -> ClassificationLabel:
    if count == 2 and len(norms) == 1:
        (norm,) = norms
        return {
            1: ClassificationLabel("B", 1),
            2: ClassificationLabel("A", 1),
            3: B1_PRIME,
            4: ClassificationLabel("C", 1),
        }[norm]
    if norms == {1, 4} and count == 4:
        return ClassificationLabel("BC", 1)
    raise RootSystemError(f"No rank-1 conformal root system with norms {sorted(norms)}")


def _short_basis(
    roots: t.Sequence[LatticePoint], lattice: LatticeContext, rank: int
) -> ClassificationLabel:
    """Types B, B0 and BC, read off an orthonormal basis of short roots."""
    by_norm: dict[int, list[LatticePoint]] = {}
    for r in roots:
        by_norm.setdefault(int(lattice.norm(r)), []).append(r)
    short = by_norm.get(1, [])
    f = _functional(roots)
    basis = [r for r in short if f(r) > 0]
    if len(short) != 2 * rank or any(
        lattice.inner(a, b) for a, b in itertools.combinations(basis, 2)
    ):
        raise RootSystemError("Short roots do not form an orthonormal frame")

    pairs = {
        (i, j, s): add(basis[i], basis[j] if s > 0 else neg(basis[j]))
        for i, j in itertools.combinations(range(rank), 2)
        for s in (1, -1)
    }
    long_roots = set(by_norm.get(2, []))
    frame = {p for v in pairs.values() for p in (v, neg(v))}
    if not long_roots <= frame:
        raise RootSystemError("Long roots are not of the form ±α_i ± α_j")

    extra = set(by_norm.get(4, []))
    if extra:
        doubled = {p for b in basis for p in (add(b, b), neg(add(b, b)))}
        if extra != doubled or long_roots != frame:
            raise RootSystemError("Extra-long roots do not complete a BC root system")
        return ClassificationLabel("BC", rank)
    if long_roots == frame:
        return ClassificationLabel("B", rank)

    # B0: one of ±(α_i - α_j), ±(α_i + α_j) per pair, consistent with a choice of signs
    if len(long_roots) != rank * (rank - 1):
        raise RootSystemError("Long roots do not match a B or B0 pattern")
    signs = [1] + [0] * (rank - 1)
    for i, j in itertools.combinations(range(rank), 2):
        same = pairs[(i, j, -1)] in long_roots
        if same == (pairs[(i, j, 1)] in long_roots):
            raise RootSystemError("Long roots do not match a B or B0 pattern")
        expected = signs[i] if same else -signs[i]
        if signs[j] == 0:
            signs[j] = expected
        elif signs[j] != expected:
            raise RootSystemError("Long roots do not match a B0 pattern")
    return ClassificationLabel("B0", rank)


def _classify_component(part: RootSystem) -> ClassificationLabel:
    lattice = part.lattice
    roots = sorted(part.roots)
    norms = {part.norm(r) for r in roots}
    if not norms <= {1, 2, 3, 4}:
        msg = f"Root norms {sorted(norms)} exceed the admissible values 1, 2, 3, 4"
        raise RootSystemError(msg)
    cartan_matrix(roots, lattice)

    rank = _span_rank(roots)
    if rank == 1:
        return _rank1(norms, len(roots))
    if 3 in norms:
        raise RootSystemError("Roots of norm 3 only occur in rank 1")
    if 1 in norms:
        return _short_basis(roots, lattice, rank)

    simple = simple_system(roots)
    if len(simple) != rank:
        raise RootSystemError(f"Found {len(simple)} simple roots in rank {rank}")
    cartan = cartan_matrix(simple, lattice)
    kind, n = dynkin_type(cartan)
    log.debug("Simple system %s has Dynkin type %s%d", simple, kind, n)

    if kind in _ROOT_COUNTS and len(roots) != _ROOT_COUNTS[kind](n):
        msg = f"{len(roots)} roots do not fill the {kind}{n} root system"
        raise RootSystemError(msg)
    if norms == {2} and kind in ("A", "D", "E"):
        return ClassificationLabel(kind, n)
    if norms == {2, 4} and kind == "B":
        long_simple = [a for a in simple if lattice.norm(a) == 4]
        if len(long_simple) == 1:
            return ClassificationLabel("C", n)
    msg = f"Type {kind}{n} with norms {sorted(norms)} is not a conformal root system"
    raise RootSystemError(msg)


def classify_posdef(delta: RootSystem) -> list[ClassificationLabel]:
    """Label every indecomposable component of a finite positive definite Δ.

    Raises
    ------
    RootSystemError
        If the lattice is not positive definite, Δ is not a finite symmetric
        set closed under partial summation, or a component has no admissible type
    """
    if delta.lattice.definiteness != Definiteness.POSITIVE:
        raise RootSystemError("Classification needs a positive definite lattice")
    if delta.status != ClosureStatus.CLOSED_FINITE:
        raise RootSystemError(f"Classification needs a finite root system, got {delta.status}")
    if not delta.roots:
        raise RootSystemError("Cannot classify an empty root set")
    if not delta.is_symmetric():
        raise RootSystemError("Root set is not symmetric")
    if missing := delta.missing_sums():
        a, b = missing[0]
        msg = f"Root set is not closed: {a} + {b} is missing"
        raise RootSystemError(msg)
    return [_classify_component(part) for part in components(delta)]
