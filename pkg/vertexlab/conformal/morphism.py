import functools
import itertools
import math
import typing as t
from fractions import Fraction

from vertexlab.base.exceptions import MissingImageError, PresentationError
from vertexlab.base.log import get_logger
from vertexlab.base.models import Report
from vertexlab.base.utils import parallel_map
from vertexlab.conformal.builtins import clifford, heisenberg, n2, parse_family, sl2, tkk, virasoro, weyl
from vertexlab.conformal.element import CENTRAL, ConformalElement
from vertexlab.conformal.presentation import ConformalPresentation
from vertexlab.fock.engine import derive_power, product
from vertexlab.fock.grammar import format_state
from vertexlab.fock.state import FockState
from vertexlab.foundation.scalars import binom, sign
from vertexlab.lattice.context import LatticeContext

log = get_logger(__name__)

ImageRule: t.TypeAlias = t.Callable[[str], FockState | None]


class Embedding:
    """A map of generators into a lattice vertex algebra, extended along D."""

    def __init__(
        self,
        presentation: ConformalPresentation,
        lattice: LatticeContext,
        images: t.Mapping[str, FockState] | ImageRule,
    ) -> None:
        self.presentation = presentation
        self.lattice = lattice
        self._rule: ImageRule = images.get if isinstance(images, t.Mapping) else images

    @functools.cache
    def image(self, gid: str) -> FockState:
        """Image of a generator; the central element goes to the vacuum unless mapped.

        Raises
        ------
        MissingImageError
            If the generator has no image
        """
        state = self._rule(gid)
        if state is None and gid == CENTRAL:
            return FockState.vacuum(self.lattice)
        if state is None:
            msg = f"No image for generator {gid!r} of {self.presentation.name}"
            raise MissingImageError(msg)
        if state.lattice != self.lattice:
            raise PresentationError(f"Image of {gid!r} lives in {state.lattice}, expected {self.lattice}")
        return state

    def __call__(self, x: ConformalElement) -> FockState:
        total = FockState.zero(self.lattice)
        for (gid, k), c in x.terms.items():
            total = total + derive_power(self.image(gid), k) * c
        return total


def verify_morphism(
    presentation: ConformalPresentation,
    images: Embedding | t.Mapping[str, FockState],
    max_gen: int,
    max_n: int,
    lattice: LatticeContext | None = None,
) -> Report:
    """Check φ(g)∟n φ(h) = φ(g∟n h) for all generator pairs within the bounds.

    Parameters
    ----------
    presentation : ConformalPresentation
        Source algebra
    images : Embedding or mapping
        Images of the generators; a mapping requires `lattice`
    max_gen : int
        Largest family index of the generators taken into account
    max_n : int
        Largest product index

    Returns
    -------
    Report
        One entry per compared product
    """
    if isinstance(images, Embedding):
        phi = images
    else:
        if lattice is None:
            lattice = next(iter(images.values())).lattice
        phi = Embedding(presentation, lattice, images)

    gens = presentation.generators(max_gen)
    for gid in gens:
        phi.image(gid)

    def compare(pair: tuple[str, str]) -> list[tuple[bool, str]]:
        g, h = pair
        out = []
        for n in range(max_n + 1):
            lhs = product(phi.image(g), n, phi.image(h))
            rhs = phi(presentation.gproduct(g, n, h))
            out.append((lhs == rhs, f"{g}∟{n}{h}: {format_state(lhs)} != {format_state(rhs)}"))
        return out

    report = Report(name=f"morphism:{presentation.name}")
    for outcomes in parallel_map(compare, list(itertools.product(gens, repeat=2))):
        for ok, detail in outcomes:
            report.record("morphism", ok, lambda detail=detail: detail)
    log.info("%s: %d products, %d violations", report.name, report.checked, len(report.violations))
    return report


def _rank1(norm: int) -> LatticeContext:
    return LatticeContext([[norm]])


def _vertex(lattice: LatticeContext, a: int) -> FockState:
    return FockState.vertex(lattice, (a,))


def _bilinear(lattice: LatticeContext, a: int, b: int) -> ImageRule:
    """Rule sending p_m-like family members with index m to v_a∟(-m-1) v_b."""

    def rule(gid: str) -> FockState | None:
        _, m = parse_family(gid)
        return product(_vertex(lattice, a), -m - 1, _vertex(lattice, b))

    return rule


def _weyl_rule(lattice: LatticeContext) -> ImageRule:
    families = {"p": _bilinear(lattice, -1, 1), "u": _bilinear(lattice, -1, -1), "su": _bilinear(lattice, 1, 1)}

    def rule(gid: str) -> FockState | None:
        if gid == CENTRAL:
            return None
        family, _ = parse_family(gid)
        return families[family](gid)

    return rule


def standard_embedding(name: str) -> Embedding:
    """The realization of a builtin presentation inside a rank-one lattice algebra.

    Raises
    ------
    PresentationError
        If the presentation has no standard realization
    """
    match name:
        case "heisenberg":
            lattice = _rank1(1)
            return Embedding(heisenberg(), lattice, {"h1": FockState.heisenberg(lattice, 0)})
        case "clifford":
            lattice = _rank1(1)
            images = {"g1": _vertex(lattice, 1), "g-1": _vertex(lattice, -1)}
            return Embedding(clifford(), lattice, images)
        case "sl2":
            lattice = _rank1(2)
            images = {
                "e": _vertex(lattice, 1),
                "f": _vertex(lattice, -1),
                "h": FockState.heisenberg(lattice, 0),
            }
            return Embedding(sl2(), lattice, images)
        case "n2":
            lattice = _rank1(3)
            a = FockState.heisenberg(lattice, 0)
            images = {
                "g1": _vertex(lattice, 1),
                "g-1": _vertex(lattice, -1) * Fraction(1, 3),
                "h": a * Fraction(-1, 3),
                "v": product(a, -1, a) * Fraction(1, 6),
            }
            return Embedding(n2(1), lattice, images)
        case "virasoro":
            lattice = _rank1(1)
            return Embedding(virasoro(), lattice, _weyl_rule(lattice))
        case "weyl":
            lattice = _rank1(1)
            return Embedding(weyl(), lattice, _weyl_rule(lattice))
        case "tkk":
            lattice = _rank1(1)
            return Embedding(tkk(), lattice, _weyl_rule(lattice))
    raise PresentationError(f"No standard embedding for {name!r}")


def winv0_words(n: int) -> tuple[FockState, FockState]:
    """The two iterated products of ᾶ = α(-1)v_0 in the rank-one algebra of norm 1.

    The first is (ᾶ∟-2 ᾶ) followed by n-2 products ∟-1 ᾶ, the second is ᾶ
    followed by n products ∟-1 ᾶ.
    """
    if n < 2:
        raise ValueError(f"The word identity needs n >= 2, got {n}")
    lattice = _rank1(1)
    a = FockState.heisenberg(lattice, 0)
    first = product(a, -2, a)
    for _ in range(n - 2):
        first = product(first, -1, a)
    second = a
    for _ in range(n):
        second = product(second, -1, a)
    return first, second


def winv0_holds(n: int) -> bool:
    """p_n = (-1)^n / (n+1)! (C(n+1,2) W1 - W2) for the words W1, W2 of `winv0_words`."""
    first, second = winv0_words(n)
    lattice = first.lattice
    p_n = product(_vertex(lattice, -1), -n - 1, _vertex(lattice, 1))
    rhs = (first * binom(n + 1, 2) - second) * Fraction(sign(n), math.factorial(n + 1))
    return p_n == rhs
