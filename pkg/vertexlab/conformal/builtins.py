import functools
import re
import typing as t
from fractions import Fraction

from vertexlab.base.exceptions import PresentationError
from vertexlab.conformal.element import CENTRAL, ConformalElement
from vertexlab.conformal.presentation import (
    CENTRAL_GENERATOR,
    ConformalPresentation,
    Generator,
    ProductKey,
    TablePresentation,
)
from vertexlab.foundation.scalars import ScalarLike, as_scalar, binom, sign

_FAMILY_ID = re.compile(r"^(p|u|su)(\d+)$")


def parse_family(gid: str) -> tuple[str, int]:
    """Split a family id such as "p3" or "su1" into its family and index."""
    if match := _FAMILY_ID.match(gid):
        return match.group(1), int(match.group(2))
    raise PresentationError(f"Malformed generator id {gid!r}")


def _member(family: str, m: int) -> ConformalElement:
    """The family generator with index m, zero for negative m."""
    return ConformalElement.generator(f"{family}{m}") if m >= 0 else ConformalElement()


class WeylPresentation(ConformalPresentation):
    """Differential operators on the circle: p_m = coefficients of p^m t^n / m!.

    p_m∟k p_n = C(m+n-k, m) p_{m+n-k}
                - (-1)^k Σ_{s=0}^{m-k} C(m+n-k-s, n) D^(s) p_{m+n-k-s}
                + δ_{k,m+n+1} (-1)^m c
    """

    def __init__(self, central: bool = True) -> None:
        super().__init__("weyl")
        self.central = central

    def generator(self, gid: str) -> Generator:
        if gid == CENTRAL:
            return CENTRAL_GENERATOR
        family, m = parse_family(gid)
        if family != "p":
            raise PresentationError(f"weyl has no generator {gid!r}")
        return Generator(gid, 0, Fraction(m + 1))

    def generators(self, max_gen: int) -> list[str]:
        return [f"p{m}" for m in range(max_gen + 1)]

    def _stored(self, g: str, k: int, h: str) -> ConformalElement:
        m, n = parse_family(g)[1], parse_family(h)[1]
        top = m + n - k
        out = _member("p", top) * binom(top, m)
        for s in range(m - k + 1):
            out = out - _member("p", top - s).divided(s) * (sign(k) * binom(top - s, n))
        if self.central and k == m + n + 1:
            out = out + ConformalElement.central(sign(m))
        return out

    def odd_part(self, m: int) -> ConformalElement:
        """u_m = τ(p_m) - p_m = -p_m + (-1)^m Σ_{i=0}^m D^(i) p_{m-i}, τ the anti-involution t ↦ t, p ↦ -p."""
        out = -_member("p", m)
        for i in range(m + 1):
            out = out + _member("p", m - i).divided(i) * sign(m)
        return out


class TkkPresentation(ConformalPresentation):
    """The Tits-Kantor-Koecher algebra built on the Weyl algebra and its odd part.

    Independent generators are p_m (m ≥ 0), u_m and su_m = σ(u_m) (m odd)
    and the central element. For even m, u_m = -½ Σ_{i≥1} D^(i) u_{m-i}.
    """

    def __init__(self, central: bool = True) -> None:
        super().__init__("tkk")
        self.central = central
        self._weyl = WeylPresentation(central)

    def generator(self, gid: str) -> Generator:
        if gid == CENTRAL:
            return CENTRAL_GENERATOR
        _, m = parse_family(gid)
        return Generator(gid, 0, Fraction(m + 1))

    def generators(self, max_gen: int) -> list[str]:
        ps = [f"p{m}" for m in range(max_gen + 1)]
        odd = range(1, max_gen + 1, 2)
        return ps + [f"u{m}" for m in odd] + [f"su{m}" for m in odd]

    @functools.cache
    def canonical(self, gid: str) -> ConformalElement:
        if gid == CENTRAL:
            return ConformalElement.central()
        family, m = parse_family(gid)
        if family == "p" or m % 2:
            return ConformalElement.generator(gid)
        out = ConformalElement()
        for i in range(1, m + 1):
            out = out + self.canonical(f"{family}{m - i}").divided(i)
        return out * Fraction(-1, 2)

    def _member(self, family: str, m: int) -> ConformalElement:
        return self.canonical(f"{family}{m}") if m >= 0 else ConformalElement()

    def _p_u(self, m: int, k: int, n: int) -> ConformalElement:
        out = self._member("u", m + n - k) * binom(m + n - k, m)
        if k == 0:
            for i in range(n + 1):
                out = out - self._member("u", m + n - i).divided(i) * (sign(n) * binom(m + n - i, m))
        return out

    def _p_su(self, m: int, k: int, n: int) -> ConformalElement:
        top = m + n - k
        out = self._member("su", top) * (sign(m + 1) * binom(m + n, m))
        for i in range(n + 1):
            out = out + self._member("su", top - i).divided(i) * (sign(m + n) * binom(top - i, m - k))
        return out

    def _u_su(self, m: int, k: int, n: int) -> ConformalElement:
        top = m + n - k
        out = _member("p", top) * (binom(top, m) - sign(m) * binom(m + n, m))
        for j in range(k, m + n + 1):
            for r in range(k + 1):
                c = sign(r) * binom(k, r) * (binom(j - k, m) - sign(m) * binom(j - r, m))
                if c:
                    out = out - _member("p", j - k).divided(m + n - j) * (sign(n) * c)
        if self.central and k == m + n + 1:
            out = out + ConformalElement.central(sign(m + 1) * (binom(m + n, m) - 1))
        return out

    def _stored(self, g: str, k: int, h: str) -> ConformalElement:
        (fg, m), (fh, n) = parse_family(g), parse_family(h)
        match fg, fh:
            case "p", "p":
                return self._weyl.gproduct(g, k, h)
            case "p", "u":
                return self._p_u(m, k, n)
            case "p", "su":
                return self._p_su(m, k, n)
            case "u", "su":
                return self._u_su(m, k, n)
            case ("u", "u") | ("su", "su"):
                return ConformalElement()
            case _:
                return self.qs(h, k, g)


def _gens(*specs: tuple[str, int, ScalarLike]) -> list[Generator]:
    return [Generator(gid, parity, as_scalar(Fraction(degree))) for gid, parity, degree in specs]


def heisenberg(gram: t.Sequence[t.Sequence[int]] = ((1,),)) -> TablePresentation:
    """Affinization of an abelian algebra with form `gram`: h_i∟1 h_j = G_ij c."""
    rank = len(gram)
    gens = _gens(*[(f"h{i + 1}", 0, 1) for i in range(rank)])
    table: dict[ProductKey, ConformalElement] = {}
    for i in range(rank):
        for j in range(rank):
            if gram[i][j]:
                table[(f"h{i + 1}", 1, f"h{j + 1}")] = ConformalElement.central(gram[i][j])
    return TablePresentation("heisenberg", gens, table)


def clifford() -> TablePresentation:
    """Two odd generators with g_ε∟0 g_{-ε} = c."""
    return TablePresentation(
        "clifford",
        _gens(("g1", 1, Fraction(1, 2)), ("g-1", 1, Fraction(1, 2))),
        {("g1", 0, "g-1"): ConformalElement.central()},
    )


def virasoro() -> TablePresentation:
    """The Virasoro algebra in the normalization of the generator p_1 of the Weyl family."""
    p1 = ConformalElement.generator("p1")
    return TablePresentation(
        "virasoro",
        _gens(("p1", 0, 2)),
        {
            ("p1", 0, "p1"): p1.derive(),
            ("p1", 1, "p1"): p1 * 2,
            ("p1", 3, "p1"): ConformalElement.central(-1),
        },
    )


def sl2() -> TablePresentation:
    """Affine sl2 with the trace form."""
    e, f, h = (ConformalElement.generator(g) for g in ("e", "f", "h"))
    return TablePresentation(
        "sl2",
        _gens(("e", 0, 1), ("f", 0, 1), ("h", 0, 1)),
        {
            ("e", 0, "f"): h,
            ("e", 1, "f"): ConformalElement.central(),
            ("h", 0, "e"): e * 2,
            ("h", 0, "f"): f * -2,
            ("h", 1, "h"): ConformalElement.central(2),
        },
    )


def n2(central_charge: ScalarLike = 0) -> TablePresentation:
    """The N=2 superconformal algebra with central charge `central_charge`."""
    cc = as_scalar(central_charge)
    v, h = ConformalElement.generator("v"), ConformalElement.generator("h")
    table: dict[ProductKey, ConformalElement] = {
        ("v", 0, "v"): v.derive(),
        ("v", 1, "v"): v * 2,
        ("v", 3, "v"): ConformalElement.central(cc / 2),
        ("v", 0, "h"): h.derive(),
        ("v", 1, "h"): h,
        ("h", 1, "h"): ConformalElement.central(cc / 3),
        ("g-1", 0, "g1"): v + h.derive() * Fraction(1, 2),
        ("g-1", 1, "g1"): h,
        ("g-1", 2, "g1"): ConformalElement.central(cc / 3),
        ("g1", 0, "g1"): ConformalElement(),
        ("g-1", 0, "g-1"): ConformalElement(),
        ("h", 0, "h"): ConformalElement(),
    }
    for eps in (1, -1):
        gamma = ConformalElement.generator(f"g{eps}")
        table[("v", 0, f"g{eps}")] = gamma.derive()
        table[("v", 1, f"g{eps}")] = gamma * Fraction(3, 2)
        table[("h", 0, f"g{eps}")] = gamma * -eps
    return TablePresentation(
        "n2",
        _gens(("v", 0, 2), ("h", 0, 1), ("g1", 1, Fraction(3, 2)), ("g-1", 1, Fraction(3, 2))),
        table,
    )


def weyl(central: bool = True) -> WeylPresentation:
    return WeylPresentation(central)


def tkk(central: bool = True) -> TkkPresentation:
    return TkkPresentation(central)


BUILTINS: t.Final[dict[str, t.Callable[[], ConformalPresentation]]] = {
    "heisenberg": heisenberg,
    "clifford": clifford,
    "virasoro": virasoro,
    "sl2": sl2,
    "weyl": weyl,
    "n2": n2,
    "tkk": tkk,
}


def builtin(name: str) -> ConformalPresentation:
    """Construct a named presentation with default parameters.

    Raises
    ------
    PresentationError
        If the name is not a known presentation
    """
    try:
        factory = BUILTINS[name]
    except KeyError:
        known = ", ".join(BUILTINS)
        raise PresentationError(f"Unknown presentation {name!r}; expected one of {known}") from None
    return factory()
