import itertools
import typing as t

from vertexlab.base.log import get_logger
from vertexlab.base.models import Report
from vertexlab.base.utils import parallel_map
from vertexlab.conformal.element import ConformalElement
from vertexlab.conformal.presentation import ConformalPresentation
from vertexlab.foundation.scalars import binom, sign

log = get_logger(__name__)

Outcome: t.TypeAlias = tuple[str, bool, str]


def _pairwise(P: ConformalPresentation, g: str, h: str, max_n: int) -> list[Outcome]:
    out: list[Outcome] = []
    x, y = ConformalElement.generator(g), ConformalElement.generator(h)
    locality = P.locality(g, h)
    expected_degree = P.generator(g).degree + P.generator(h).degree

    for n in range(locality, max(locality, max_n) + 1):
        raw = P.raw_product(g, n, h)
        out.append(("C1", not raw, f"{g}∟{n}{h} = {raw} above locality {locality}"))

    for n in range(max_n + 1):
        product = P.gproduct(g, n, h)
        graded = all(P.degree_of(gid, k) == expected_degree - n - 1 for gid, k in product.terms)
        out.append(("grading", graded, f"{g}∟{n}{h} = {product}"))

        lhs = P.cproduct(x.derive(), n, y)
        rhs = P.cproduct(x, n - 1, y) * -n if n else ConformalElement()
        out.append(("C2", lhs == rhs, f"(D{g})∟{n}{h}: {lhs} != {rhs}"))

        lhs = P.cproduct(x, n, y.derive())
        rhs = product.derive() + (P.cproduct(x, n - 1, y) * n if n else ConformalElement())
        out.append(("C3", lhs == rhs, f"{g}∟{n}(D{h}): {lhs} != {rhs}"))

        rhs = P.qs(h, n, g)
        out.append(("C4", product == rhs, f"{g}∟{n}{h}: {product} != {rhs}"))
    return out


def _jacobi(P: ConformalPresentation, a: str, b: str, c: str, max_n: int) -> list[Outcome]:
    """(a∟n b)∟m c = Σ_i (-1)^i C(n,i) [a∟(n-i)(b∟(m+i)c) - ±b∟(m+i)(a∟(n-i)c)]."""
    out: list[Outcome] = []
    x, y, z = (ConformalElement.generator(g) for g in (a, b, c))
    koszul = sign(P.generator(a).parity * P.generator(b).parity)
    total = P.generator(a).degree + P.generator(b).degree + P.generator(c).degree
    for n in range(min(max_n, P.locality(a, b) - 1) + 1):
        for m in range(max_n + 1):
            if m + n > total - 2:
                break
            lhs = P.cproduct(P.gproduct(a, n, b), m, z)
            rhs = ConformalElement()
            for i in range(n + 1):
                coeff = sign(i) * binom(n, i)
                first = P.cproduct(x, n - i, P.gproduct(b, m + i, c))
                second = P.cproduct(y, m + i, P.gproduct(a, n - i, c))
                rhs = rhs + (first - second * koszul) * coeff
            out.append(("C5", lhs == rhs, f"({a}∟{n}{b})∟{m}{c}: {lhs} != {rhs}"))
    return out


def axioms_check(P: ConformalPresentation, max_gen: int, max_n: int) -> Report:
    """Verify locality, grading, translation, quasisymmetry and the Jacobi identity.

    Parameters
    ----------
    P : ConformalPresentation
        The presentation to check
    max_gen : int
        Largest family index of the generators taken into account
    max_n : int
        Largest product index

    Returns
    -------
    Report
        All evaluated identities and the failed ones
    """
    if max_gen < 0 or max_n < 0:
        raise ValueError("Axiom bounds must be nonnegative")
    report = Report(name=f"axioms:{P.name}")
    gens = P.generators(max_gen)
    log.info("Checking axioms of %s on %d generators up to n=%d", P.name, len(gens), max_n)

    pairs = list(itertools.product(gens, repeat=2))
    for outcomes in parallel_map(lambda gh: _pairwise(P, *gh, max_n), pairs):
        for check, ok, detail in outcomes:
            report.record(check, ok, lambda detail=detail: detail)

    triples = list(itertools.product(gens, repeat=3))
    for outcomes in parallel_map(lambda abc: _jacobi(P, *abc, max_n), triples):
        for check, ok, detail in outcomes:
            report.record(check, ok, lambda detail=detail: detail)

    log.info("%s: %d identities, %d violations", report.name, report.checked, len(report.violations))
    return report
