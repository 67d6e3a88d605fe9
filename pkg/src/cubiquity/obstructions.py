"""Cubiquity obstructions and the brute-force oracle.

A full-rank sublattice of Z^n is cubiquitous when it meets every translated
unit cube x + {0,1}^n.  This module provides

* the Wu obstruction for non-acute subsets (sum of squared Wu coordinates
  against 4n - 3|odd coordinates|), and its restatement for orthogonal
  subsets in terms of the norm excess,
* the determinant gate: index above 2^n rules cubiquity out, index exactly
  2^n reduces it to the existence of a Hajos basis,
* the brute-force oracle that decides cubiquity outright by scanning coset
  representatives, which grounds every structural criterion in the tests.

Obstructions never claim a lattice IS cubiquitous; only the oracle and the
Hajos route do.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import NotNonAcute, NotOrthogonal, ResourceLimit
from .lattice import (
    DEFAULT_RESOURCE_CAP,
    BasisMatrix,
    Vector,
    _membership_test,
    hnf_box,
)
from .subsets import Subset, is_non_acute, is_orthogonal, stats

#: Largest dimension for which the Hajos search will try all row orders.
DEFAULT_PERMUTATION_CAP = 8


class Status(str, Enum):
    CUBIQUITOUS = "Cubiquitous"
    NOT_CUBIQUITOUS = "NotCubiquitous"
    OBSTRUCTED = "Obstructed"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class WuData:
    """The Wu element (sum of the subset's vectors) and its parity pattern.

    ``vector`` holds the coordinates of the sum; ``odd``, ``even_nonzero``
    and ``zero`` partition the coordinate indices by the parity of the
    corresponding entry.
    """

    vector: Vector
    odd: tuple[int, ...]
    even_nonzero: tuple[int, ...]
    zero: tuple[int, ...]


@dataclass(frozen=True)
class HajosBasis:
    """A lower-triangular basis with 2s on the diagonal and 0/1 below it.

    ``row_order`` records the coordinate order under which the Hermite form
    took this shape (identity order is tried first).
    """

    matrix: BasisMatrix
    row_order: tuple[int, ...]


@dataclass(frozen=True)
class CubiquityVerdict:
    """Decision outcome with a re-checkable certificate.

    ``witness`` is a cube base point x with no lattice point in
    x + {0,1}^n (brute-force NotCubiquitous only).  ``inequality`` carries
    the (lhs, rhs) pair of the obstruction that fired or failed to fire.
    ``hajos`` is set when the determinant gate found a Hajos basis.
    ``block`` names an offending component for classification verdicts.
    """

    status: Status
    witness: Optional[Vector] = None
    inequality: Optional[tuple[int, int]] = None
    hajos: Optional[HajosBasis] = None
    block: object = None

    def to_json_dict(self) -> dict:
        """Fixed-order JSON object: status, witness, inequality, hajos_basis."""
        return {
            "status": self.status.value,
            "witness": list(self.witness) if self.witness is not None else None,
            "inequality": (
                {"lhs": self.inequality[0], "rhs": self.inequality[1]}
                if self.inequality is not None else None),
            "hajos_basis": (
                [list(r) for r in self.hajos.matrix.rows]
                if self.hajos is not None else None),
        }


def wu_element(subset: Subset) -> WuData:
    """Sum of the subset's vectors and the parity partition of its entries."""
    n = subset.n
    total = tuple(sum(v[j] for v in subset.vectors) for j in range(n))
    odd = tuple(j for j in range(n) if total[j] % 2)
    even_nonzero = tuple(j for j in range(n) if total[j] and total[j] % 2 == 0)
    zero = tuple(j for j in range(n) if total[j] == 0)
    return WuData(total, odd, even_nonzero, zero)


def wu_obstruction(subset: Subset) -> CubiquityVerdict:
    """Obstruct cubiquity of a non-acute subset via its Wu element.

    Obstructed when the squared length of the Wu element strictly exceeds
    4n - 3*(number of odd coordinates); Inconclusive otherwise.  The
    obstruction is one-directional, so Cubiquitous is never returned.
    """
    if not is_non_acute(subset):
        raise NotNonAcute("wu_obstruction requires a non-acute subset")
    wu = wu_element(subset)
    lhs = sum(k * k for k in wu.vector)
    rhs = 4 * subset.n - 3 * len(wu.odd)
    status = Status.OBSTRUCTED if lhs > rhs else Status.INCONCLUSIVE
    return CubiquityVerdict(status, inequality=(lhs, rhs))


def wu_obstruction_orthogonal(subset: Subset) -> CubiquityVerdict:
    """Wu obstruction specialised to orthogonal subsets.

    Fires when the norm excess strictly exceeds n - 3*(number of odd Wu
    coordinates).  For orthogonal subsets the squared length of the Wu
    element equals the sum of the norms, so this agrees with
    wu_obstruction on every orthogonal input.
    """
    if not is_orthogonal(subset):
        raise NotOrthogonal(
            "wu_obstruction_orthogonal requires an orthogonal subset")
    wu = wu_element(subset)
    lhs = stats(subset).excess
    rhs = subset.n - 3 * len(wu.odd)
    status = Status.OBSTRUCTED if lhs > rhs else Status.INCONCLUSIVE
    return CubiquityVerdict(status, inequality=(lhs, rhs))


def is_cubiquitous_bruteforce(
        basis: BasisMatrix,
        cap: int = DEFAULT_RESOURCE_CAP) -> CubiquityVerdict:
    """Decide cubiquity by exhausting coset representatives.

    Membership in the lattice is translation invariant, so the lattice hits
    every unit cube iff it hits x + {0,1}^n for each representative x of
    Z^n modulo the lattice.  Representatives are scanned in lexicographic
    order over the HNF box; the first x whose cube contains no lattice
    point becomes the witness, making certificates reproducible.
    """
    n = basis.n
    order = abs(basis.det)
    if order * (2 ** n) > cap:
        raise ResourceLimit(
            f"brute force needs about {order * 2 ** n} membership solves, "
            f"cap is {cap}")
    member = _membership_test(basis)
    vertices = list(itertools.product((0, 1), repeat=n))
    for x in hnf_box(basis):
        if not any(member([a + e for a, e in zip(x, eps)])
                   for eps in vertices):
            return CubiquityVerdict(Status.NOT_CUBIQUITOUS, witness=x)
    return CubiquityVerdict(Status.CUBIQUITOUS)


def hajos_basis(basis: BasisMatrix,
                perm_cap: int = DEFAULT_PERMUTATION_CAP
                ) -> Optional[HajosBasis]:
    """Search for a Hajos basis of the lattice.

    A Hajos basis is lower triangular with 2s on the diagonal and 0/1
    entries below, hence has determinant 2^n; anything else returns None
    immediately.  Whether existence depends on the coordinate order is not
    settled, so all row orders are tried (identity first) and the
    successful order is recorded.
    """
    n = basis.n
    if abs(basis.det) != 2 ** n:
        return None
    if n > perm_cap:
        raise ResourceLimit(
            f"Hajos search over {n}! row orders exceeds cap {perm_cap}")
    for order in itertools.permutations(range(n)):
        h = basis.permute_rows(order).hnf
        if all(h.rows[i][i] == 2 for i in range(n)):
            # The HNF reduction range makes every subdiagonal entry 0 or 1.
            return HajosBasis(matrix=h, row_order=order)
    return None


def det_gate(basis: BasisMatrix,
             perm_cap: int = DEFAULT_PERMUTATION_CAP) -> CubiquityVerdict:
    """Determinant criterion for cubiquity.

    |det| above 2^n is Obstructed outright.  |det| equal to 2^n is decided
    by the Hajos search (Cubiquitous iff a Hajos basis exists).  Smaller
    determinants are Inconclusive.
    """
    n = basis.n
    d = abs(basis.det)
    bound = 2 ** n
    if d > bound:
        return CubiquityVerdict(Status.OBSTRUCTED, inequality=(d, bound))
    if d == bound:
        found = hajos_basis(basis, perm_cap=perm_cap)
        if found is not None:
            return CubiquityVerdict(Status.CUBIQUITOUS, hajos=found)
        return CubiquityVerdict(Status.NOT_CUBIQUITOUS)
    return CubiquityVerdict(Status.INCONCLUSIVE)
