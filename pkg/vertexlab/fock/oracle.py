import itertools
import math
import typing as t
from collections import Counter
from fractions import Fraction

from vertexlab.fock.state import FockMonomial, FockState, Terms, accumulate
from vertexlab.foundation.partitions import partitions
from vertexlab.lattice.context import LatticeContext, add


def vanvb(
    lattice: LatticeContext,
    alpha: t.Sequence[int],
    n: int,
    beta: t.Sequence[int],
) -> FockState:
    """v_α∟n v_β by the closed partition sum, independent of the product engine.

    v_α∟n v_β = ε(α,β) Σ_{κ ⊢ N} Π_j (α(-j)/j)^{k_j} / k_j! v_{α+β}

    with N = -(α|β) - n - 1 and k_j the multiplicity of j in κ.
    """
    order = -int(lattice.inner(alpha, beta)) - n - 1
    if order < 0:
        return FockState.zero(lattice)

    target = add(alpha, beta)
    support = [j for j in range(lattice.rank) if alpha[j]]
    terms: Terms = {}

    for kappa in partitions(order):
        mult = Counter(kappa.parts)
        weight = Fraction(1)
        for j, k in mult.items():
            weight /= j**k * math.factorial(k)

        factors = [j for j, k in sorted(mult.items()) for _ in range(k)]
        for choice in itertools.product(support, repeat=len(factors)):
            coeff = weight * math.prod(alpha[i] for i in choice)
            modes = tuple(sorted((-j, i) for j, i in zip(factors, choice)))
            accumulate(terms, {FockMonomial(modes, target): Fraction(1)}, coeff)

    state = FockState(lattice, terms)
    return state * lattice.epsilon(tuple(alpha), tuple(beta))
