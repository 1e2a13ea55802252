"""Checks on semi-positive root systems related to extended affine root systems."""

from vertexlab.base.log import get_logger
from vertexlab.base.models import Report
from vertexlab.lattice.context import Definiteness, add
from vertexlab.roots.system import RootSystem

log = get_logger(__name__)


def check_ears(delta: RootSystem) -> Report:
    """Check the indecomposability condition and, without short roots, δ + Δ ⊂ Δ.

    Every isotropic root δ must have a real root α with δ + α again real.
    When no root has norm 1, δ + α must be a root for every isotropic δ and
    every root α with δ + α ≠ 0, checked inside the stored window.
    """
    report = Report(name="ears")
    lattice = delta.lattice
    report.record(
        "definiteness",
        lattice.definiteness != Definiteness.INDEFINITE,
        lambda: f"the form {lattice} is indefinite",
    )
    real = delta.real_roots
    isotropic = sorted(delta.isotropic_roots)

    for d in isotropic:
        report.record(
            "indecomposability",
            any(add(d, a) in real for a in real),
            lambda d=d: f"no real root α with {d} + α real",
        )

    if any(delta.norm(r) == 1 for r in real):
        log.debug("Short roots present; skipping the isotropic shift check")
        return report

    for d in isotropic:
        for a in sorted(delta.roots):
            s = add(d, a)
            if not any(s) or not delta.in_window(s):
                continue
            report.record(
                "isotropic-shift",
                s in delta.roots,
                lambda d=d, a=a: f"{d} + {a} is not a root",
            )
    return report
