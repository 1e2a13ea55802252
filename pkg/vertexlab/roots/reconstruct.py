"""Finite root systems in semi-positive lattices from their positive definite image.

Given Δ̄ ⊂ Λ̄ with components of type B or B0, a lattice Λ₀ of isotropic
vectors, finite fiber sets Σ(β) ⊂ Λ₀ over the short roots and shifts δ(α) ∈ Λ₀
over a set Ω of long roots, the roots of Λ = Λ̄ ⊕ Λ₀ are

    {β + δ : β short, δ ∈ Σ(β)} ∪ {α + δ(α) : α ∈ Ω} ∪ (long roots not in Ω)

together with the isotropic partial sums (β + δ) + (-β - δ') = δ - δ'.
"""

import typing as t

from vertexlab.base.exceptions import ConstraintViolation, RootSystemError
from vertexlab.base.log import get_logger
from vertexlab.lattice.context import LatticeContext, LatticePoint, neg
from vertexlab.roots.cartan import classify_posdef
from vertexlab.roots.system import ClosureStatus, RootSystem, close

log = get_logger(__name__)

_FIBER_TYPES = frozenset({"B", "B0"})


def _point(v: t.Sequence[int]) -> LatticePoint:
    return tuple(int(x) for x in v)


def _fibers(
    short: list[LatticePoint],
    sigma: t.Mapping[LatticePoint, t.Iterable[t.Sequence[int]]],
    isotropic_rank: int,
) -> dict[LatticePoint, frozenset[LatticePoint]]:
    fibers = {_point(k): frozenset(_point(d) for d in v) for k, v in sigma.items()}
    for root in fibers:
        if root not in short:
            raise ConstraintViolation(f"{root} is not a short root", witness=root)
    for root in short:
        fiber = fibers.get(root)
        if not fiber:
            raise ConstraintViolation(f"No fiber set for short root {root}", witness=root)
        for d in fiber:
            if len(d) != isotropic_rank:
                msg = f"Fiber vector {d} does not have rank {isotropic_rank}"
                raise ConstraintViolation(msg, witness=d)
            if neg(d) not in fiber:
                msg = f"Fiber over {root} is not symmetric"
                raise ConstraintViolation(msg, witness=(root, d))
        if fibers.get(neg(root)) != fiber:
            msg = f"Fibers over {root} and {neg(root)} differ"
            raise ConstraintViolation(msg, witness=root)
    return fibers


def _shifts(
    long_roots: list[LatticePoint],
    shifts: t.Mapping[LatticePoint, t.Sequence[int]],
    isotropic_rank: int,
) -> dict[LatticePoint, LatticePoint]:
    out = {_point(k): _point(v) for k, v in shifts.items()}
    for root, d in out.items():
        if root not in long_roots:
            raise ConstraintViolation(f"{root} is not a long root", witness=root)
        if len(d) != isotropic_rank:
            msg = f"Shift {d} does not have rank {isotropic_rank}"
            raise ConstraintViolation(msg, witness=d)
        if out.get(neg(root)) != neg(d):
            msg = f"Shift of {neg(root)} is not the negative of the shift of {root}"
            raise ConstraintViolation(msg, witness=root)
    return out


def reconstruct_finite(
    quotient: RootSystem,
    isotropic_rank: int,
    sigma: t.Mapping[LatticePoint, t.Iterable[t.Sequence[int]]],
    shifts: t.Mapping[LatticePoint, t.Sequence[int]] | None = None,
) -> RootSystem:
    """Build and verify the finite root system over Δ̄ with the given fibers.

    Parameters
    ----------
    quotient : RootSystem
        Δ̄ in a positive definite lattice, all components of type B or B0
    isotropic_rank : int
        Rank of Λ₀
    sigma : Mapping
        Σ(β) for every short root β, as vectors of Λ₀
    shifts : Mapping | None
        δ(α) for the long roots α ∈ Ω

    Raises
    ------
    RootSystemError
        If Δ̄ has a component of another type
    ConstraintViolation
        If the data breaks a compatibility constraint or does not close to a
        finite root system; `witness` holds the offending data

    Returns
    -------
    RootSystem
    """
    if isotropic_rank < 0:
        raise RootSystemError(f"Isotropic rank must be nonnegative, got {isotropic_rank}")
    labels = classify_posdef(quotient)
    if bad := [str(label) for label in labels if label.kind not in _FIBER_TYPES]:
        msg = f"Reconstruction needs components of type B or B0, got {', '.join(bad)}"
        raise RootSystemError(msg)

    short = sorted(r for r in quotient.roots if quotient.norm(r) == 1)
    long_roots = sorted(r for r in quotient.roots if quotient.norm(r) == 2)
    fibers = _fibers(short, sigma, isotropic_rank)
    omega = _shifts(long_roots, shifts or {}, isotropic_rank)

    lattice = quotient.lattice
    for alpha, d in omega.items():
        for beta in short:
            if lattice.inner(alpha, beta) and d not in fibers[beta]:
                msg = f"Shift {d} of {alpha} is not in the fiber over {beta}"
                raise ConstraintViolation(
                    msg, witness={"long": alpha, "short": beta, "shift": d}
                )

    q = lattice.rank
    gram = [
        [lattice.gram[i][j] if i < q and j < q else 0 for j in range(q + isotropic_rank)]
        for i in range(q + isotropic_rank)
    ]
    total = LatticeContext(gram)
    displayed = {(*beta, *d) for beta in short for d in fibers[beta]}
    displayed |= {(*alpha, *d) for alpha, d in omega.items()}
    zero = (0,) * isotropic_rank
    displayed |= {(*alpha, *zero) for alpha in long_roots if alpha not in omega}

    result = close(displayed, total, max_norm=2, window=None)
    if result.status != ClosureStatus.CLOSED_FINITE:
        msg = f"Reconstructed roots do not close to a finite system ({result.status})"
        raise ConstraintViolation(msg, witness=result.witness)
    if extra := sorted(result.real_roots - displayed):
        log.warning("Closure added %d real roots beyond the displayed union", len(extra))

    names = "+".join(str(label) for label in labels)
    return result.with_label(f"{names} with isotropic rank {isotropic_rank}")
