import math
from fractions import Fraction

from vertexlab.fock.engine import derive_power, product, product_bound
from vertexlab.fock.state import FockState
from vertexlab.foundation.scalars import gbinom, sign


def quasisymmetry_rhs(u: FockState, v: FockState, n: int) -> FockState:
    """-(-1)^{p(u)p(v)} Σ_{i≥0} (-1)^{n+i} D^i(v∟(n+i) u)/i!, truncated by degree."""
    total = FockState.zero(u.lattice)
    bound = product_bound(v, u)
    if bound is None:
        return total
    for i in range(bound - n + 1):
        term = derive_power(product(v, n + i, u), i)
        total = total + term * Fraction(sign(n + i), math.factorial(i))
    return total * -sign(u.parity * v.parity)


def check_qs(u: FockState, v: FockState, n: int) -> bool:
    """Quasisymmetry of the n-th product for states of homogeneous parity."""
    return product(u, n, v) == quasisymmetry_rhs(u, v, n)


def jacobi_rhs(a: FockState, b: FockState, c: FockState, m: int, n: int) -> FockState:
    """Right-hand side of the associativity form of the Jacobi identity for (a∟n b)∟m c."""
    total = FockState.zero(a.lattice)

    bc_bound = product_bound(b, c)
    if bc_bound is not None:
        for i in range(bc_bound - m + 1):
            coeff = sign(i) * gbinom(n, i)
            if coeff:
                total = total + product(a, n - i, product(b, m + i, c)) * coeff

    ac_bound = product_bound(a, c)
    if ac_bound is not None:
        koszul = sign(a.parity * b.parity)
        for s in range(ac_bound + 1):
            coeff = sign(s + n) * gbinom(n, s)
            if coeff:
                total = total - product(b, m + n - s, product(a, s, c)) * (koszul * coeff)

    return total


def check_jacobi(a: FockState, b: FockState, c: FockState, m: int, n: int) -> bool:
    """(a∟n b)∟m c against the expansion over products with a and b swapped in order."""
    return product(product(a, n, b), m, c) == jacobi_rhs(a, b, c, m, n)


def check_grading(u: FockState, v: FockState, n: int) -> bool:
    """Label and degree additivity of u∟n v for homogeneous u, v."""
    result = product(u, n, v)
    if not result:
        return True
    label = tuple(x + y for x, y in zip(u.label, v.label))
    return all(
        mono.label == label and result.degree_of(mono) == u.degree + v.degree - n - 1
        for mono, _ in result
    )


def check_derivation(u: FockState, v: FockState, n: int) -> bool:
    """D is a derivation of every product and (Du)∟n v = -n u∟(n-1) v."""
    d_product = derive_power(product(u, n, v), 1)
    leibniz = product(derive_power(u, 1), n, v) + product(u, n, derive_power(v, 1))
    translation = product(derive_power(u, 1), n, v) == product(u, n - 1, v) * -n
    return d_product == leibniz and translation


