"""Symmetry, admissibility thresholds, and the reflection construction.

A basis a_1 < ... < a_k is symmetric when a_i + a_{k-i} = a_k for every
1 <= i <= k-1, equivalently when its difference sequence (counting up
from zero) reads the same in both directions.  For such bases a
generation of any x below a_k can be reflected into a generation of
h0 * a_k - x that uses exactly h0 stamps, which pins the saturation
threshold h1 into the window [h0, max(h0, 2*h0 - 2)].
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Basis, Generation, cover_profile
from .errors import (
    NotSymmetricError,
    UsesTopElementError,
    WeightExceedsBudgetError,
)

# Cap used when no saturation window is known (non-symmetric bases).
DEFAULT_H1_CAP = 64


# ---------- symmetry ----------


def differences(basis: Basis) -> tuple[int, ...]:
    """Consecutive differences of the elements, counting up from zero."""
    out = []
    prev = 0
    for value in basis.elements:
        out.append(value - prev)
        prev = value
    return tuple(out)


def is_symmetric(basis: Basis) -> bool:
    """True iff a_i + a_{k-i} = a_k for every 1 <= i <= k-1.

    Vacuously true for the one-element basis {1}.
    """
    elems = basis.elements
    k = len(elems)
    top = elems[-1]
    return all(elems[i] + elems[k - 2 - i] == top for i in range(k - 1))


def symmetrize_odd(half: Basis) -> Basis:
    """Extend m >= 2 elements to the symmetric basis with k = 2m - 1.

    The given elements become the lower half; the top is a_m + a_{m-1}
    and each remaining slot is filled by the mirror rule a_{k-i} =
    a_k - a_i.
    """
    m = half.k
    if m < 2:
        raise ValueError("need at least two elements for an odd extension")
    elems = half.elements
    top = elems[-1] + elems[-2]
    mirrored = tuple(top - value for value in reversed(elems[: m - 2]))
    return Basis(elems + mirrored + (top,))


def symmetrize_even(half: Basis) -> Basis:
    """Extend m >= 1 elements to the symmetric basis with k = 2m.

    The top is 2 * a_m; each remaining slot is filled by the mirror rule
    a_{k-i} = a_k - a_i.
    """
    m = half.k
    elems = half.elements
    top = 2 * elems[-1]
    mirrored = tuple(top - value for value in reversed(elems[: m - 1]))
    return Basis(elems + mirrored + (top,))


# ---------- admissibility thresholds ----------


def compute_h0(basis: Basis) -> int:
    """Smallest budget whose cover exceeds the top denomination.

    Always at least 2: with one stamp the cover is exactly 1 unless the
    basis is {1} alone, and either way cover(1) never exceeds the top.
    Always at most top + 1, since every x <= top + 1 splits into at most
    x stamps of 1 (or one stamp plus smaller change).
    """
    top = basis.top
    h_max = 2
    while True:
        for row in cover_profile(basis, h_max).rows:
            if row.cover > top:
                return row.h
        if h_max > top:
            raise AssertionError("cover failed to exceed top by h = top + 1")
        h_max = min(h_max * 2, top + 1)


def _first_saturation(basis: Basis, h0: int, cap: int) -> int | None:
    """Smallest h in [h0, cap] whose cover equals h * top, else None."""
    for row in cover_profile(basis, cap).rows:
        if row.h >= h0 and row.saturated:
            return row.h
    return None


def compute_h1(basis: Basis, cap: int) -> int | None:
    """Smallest budget h >= h0 whose cover saturates at h * top.

    Searches only up to ``cap`` and returns None when no budget in the
    window saturates; raises ValueError when cap < h0, since the search
    window would be empty.
    """
    h0 = compute_h0(basis)
    if cap < h0:
        raise ValueError(f"cap {cap} is below the admissibility threshold {h0}")
    return _first_saturation(basis, h0, cap)


# ---------- reflection ----------


def reflect_generation(basis: Basis, gen: Generation, h0: int) -> Generation:
    """Reflect a generation of x < top into one of h0 * top - x, weight h0.

    Works by rewriting each used denomination a_i as a_k - a_{k-i}
    (valid exactly when the basis is symmetric): reversing the first
    k - 1 coefficients and topping up with copies of the top denomination
    until the weight is exactly h0.  The input generation must not use
    the top denomination and must use at most h0 stamps.
    """
    if not is_symmetric(basis):
        raise NotSymmetricError(f"{basis} is not symmetric")
    if len(gen.coefficients) != basis.k:
        raise ValueError("generation does not match the basis size")
    if not 0 <= gen.value < basis.top:
        raise ValueError(
            f"value {gen.value} must lie in [0, {basis.top})"
        )
    if gen.weight > h0:
        raise WeightExceedsBudgetError(
            f"generation uses {gen.weight} stamps, budget is {h0}"
        )
    if gen.coefficients[-1] != 0:
        raise UsesTopElementError(
            "generation may not use the top denomination"
        )
    reflected = tuple(reversed(gen.coefficients[:-1])) + (h0 - gen.weight,)
    value = h0 * basis.top - gen.value
    rebuilt = sum(c * a for c, a in zip(reflected, basis.elements))
    if rebuilt != value:
        raise AssertionError("reflection arithmetic is inconsistent")
    return Generation(reflected, value, h0)


# ---------- reports ----------


@dataclass(frozen=True)
class BasisReport:
    """Everything the conjecture check needs to know about one basis.

    ``h1`` is None when no saturating budget exists up to ``h1_cap``.
    ``counterexample`` is True for symmetric bases whose h1 is known or
    capped strictly above h0; for non-symmetric bases it stays False.
    """

    basis: Basis
    symmetric: bool
    h0: int
    h1: int | None
    h1_cap: int
    theorem_bound: int
    conjecture_holds: bool
    counterexample: bool

    def to_json_dict(self) -> dict:
        """Stable-order dict for JSON output; do not reorder the keys."""
        return {
            "basis": str(self.basis),
            "k": self.basis.k,
            "symmetric": self.symmetric,
            "h0": self.h0,
            "h1": self.h1,
            "h1_found": self.h1 is not None,
            "theorem_bound": self.theorem_bound,
            "conjecture_holds": self.conjecture_holds,
            "counterexample": self.counterexample,
        }


def analyze(basis: Basis, cap: int | None = None) -> BasisReport:
    """Full admissibility report for one basis.

    When ``cap`` is None it defaults to the proven saturation window
    max(h0, 2*h0 - 2) for symmetric bases, else to max(64, h0) so the
    search is always well defined.  An explicit cap below h0 raises
    ValueError.
    """
    symmetric = is_symmetric(basis)
    h0 = compute_h0(basis)
    bound = max(h0, 2 * h0 - 2)
    if cap is None:
        cap = bound if symmetric else max(DEFAULT_H1_CAP, h0)
    if cap < h0:
        raise ValueError(f"cap {cap} is below the admissibility threshold {h0}")
    h1 = _first_saturation(basis, h0, cap)
    conjecture_holds = h1 == h0
    return BasisReport(
        basis=basis,
        symmetric=symmetric,
        h0=h0,
        h1=h1,
        h1_cap=cap,
        theorem_bound=bound,
        conjecture_holds=conjecture_holds,
        counterexample=symmetric and not conjecture_holds,
    )


def meure_applicable(basis: Basis) -> bool:
    """True iff the second-largest denomination is one below the largest.

    Bases of this shape are guaranteed to saturate at some finite budget,
    so an h1 search terminates in principle (the guarantee bounds nothing,
    a cap can still be too small).  Every symmetric basis with at least
    two elements qualifies automatically, because a_{k-1} = a_k - a_1;
    the condition matters as the wider net that also catches
    non-symmetric bases.
    """
    if basis.k < 2:
        return False
    return basis.elements[-2] == basis.top - 1
