"""Optional and perfect solutions, evaluation systems and the matrix solver."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .algebra import CentralSoftSet, family_union, project
from .context import Context, ObjectSet, ParamSet, iter_bits
from .errors import (
    CentralNotSubsetOfE,
    ContextMismatch,
    CoverageViolation,
    SoftSetError,
    TooLargeForOracle,
)

ORACLE_MAX_PARAMS = 20


@dataclass(frozen=True)
class ScoreReport:
    """Column tallies of an incidence matrix against a central set.

    ``b[j]`` counts the central rows containing object ``j`` and ``a[j]``
    counts all rows.  ``J`` holds the objects passing every central row,
    ``winners`` the members of ``J`` with maximal ``a``, and ``chosen`` the
    lowest-index winner (``None`` when ``J`` is empty).
    """

    objects: tuple[str, ...]
    central_size: int
    b: tuple[int, ...]
    a: tuple[int, ...]
    J: tuple[int, ...]
    winners: tuple[int, ...]
    chosen: int | None

    @property
    def winner_names(self) -> tuple[str, ...]:
        return tuple(self.objects[j] for j in self.winners)

    @property
    def chosen_name(self) -> str | None:
        return None if self.chosen is None else self.objects[self.chosen]

    def render(self) -> str:
        lines = [
            "b: " + " ".join(map(str, self.b)),
            "a: " + " ".join(map(str, self.a)),
            "J: " + (" ".join(self.objects[j] for j in self.J) or "-"),
            "winners: " + (" ".join(self.winner_names) or "-"),
        ]
        lines.append(f"optional: {self.chosen_name}" if self.chosen is not None else "optional: none")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EvaluationSystem:
    members: tuple[CentralSoftSet, ...]
    target: ParamSet

    @property
    def context(self) -> Context:
        return self.members[0].context


def incidence_matrix(a: CentralSoftSet) -> np.ndarray:
    """``n x m`` 0/1 matrix, rows in parameter order, columns in universe
    order; entry ``(i, j)`` is 1 iff object ``j`` is in the image of
    parameter ``i``."""
    ctx = a.context
    m = np.zeros((ctx.n_params, ctx.n_objects), dtype=np.uint8)
    for i, img in enumerate(a.images):
        for j in iter_bits(img):
            m[i, j] = 1
    return m


def render_matrix(matrix: np.ndarray) -> str:
    return "".join(" ".join(str(int(v)) for v in row) + "\n" for row in matrix)


def scores(matrix: np.ndarray, central: ParamSet, objects: Sequence[str] | None = None) -> ScoreReport:
    matrix = np.asarray(matrix, dtype=np.int64)
    n, m = matrix.shape
    if central < 0 or central >> n:
        raise CentralNotSubsetOfE(f"central mask {central:#b} exceeds {n} parameters")
    rows = [i for i in range(n) if central >> i & 1]
    b = matrix[rows].sum(axis=0) if rows else np.zeros(m, dtype=np.int64)
    a = matrix.sum(axis=0)
    size = len(rows)
    J = tuple(int(j) for j in np.flatnonzero(b == size))
    if J:
        best = max(int(a[j]) for j in J)
        winners = tuple(j for j in J if a[j] == best)
    else:
        winners = ()
    if objects is None:
        objects = tuple(f"o{j + 1}" for j in range(m))
    return ScoreReport(
        objects=tuple(objects),
        central_size=size,
        b=tuple(int(v) for v in b),
        a=tuple(int(v) for v in a),
        J=J,
        winners=winners,
        chosen=winners[0] if winners else None,
    )


def optional_solutions(a: CentralSoftSet) -> ScoreReport:
    return scores(incidence_matrix(a), a.central, a.context.universe)


def perfect_solutions(a: CentralSoftSet) -> ObjectSet:
    """Objects lying in every image."""
    out = a.context.full_objects
    for img in a.images:
        out &= img
    return out


def make_system(members: Iterable[CentralSoftSet], target: ParamSet | Iterable[str]) -> EvaluationSystem:
    members = tuple(members)
    if not members:
        raise SoftSetError("an evaluation system needs at least one member")
    ctx = members[0].context
    for m in members[1:]:
        if m.context != ctx:
            raise ContextMismatch("evaluation system members belong to different contexts")
    if not isinstance(target, int):
        target = ctx.param_mask(target)
    covered = 0
    for m in members:
        covered |= m.central
    if target & ~covered:
        raise CoverageViolation(
            f"target parameters {ctx.params(target & ~covered)} are not covered by any member"
        )
    return EvaluationSystem(members, target)


def system_join(s: EvaluationSystem) -> CentralSoftSet:
    """The joined members projected onto the target."""
    return project(family_union(s.members), s.target)


def solve_system(s: EvaluationSystem) -> ScoreReport:
    return optional_solutions(system_join(s))


def oracle_optional(a: CentralSoftSet) -> ObjectSet:
    """Optional solutions straight from their definition.

    Enumerates every ``G`` with ``A <= G <= E`` whose images share an
    object, keeps those of maximal size and returns the union of their
    common objects.  The intersection over an empty ``G`` is ``U``.
    """
    ctx = a.context
    n = ctx.n_params
    if n > ORACLE_MAX_PARAMS:
        raise TooLargeForOracle(f"{n} parameters exceed the oracle limit {ORACLE_MAX_PARAMS}")
    free = [i for i in range(n) if not a.central >> i & 1]
    base = ctx.full_objects
    for i in iter_bits(a.central):
        base &= a.images[i]
    # Largest extensions first; the first size with a hit is the maximum.
    for k in range(len(free), -1, -1):
        found = 0
        for extra in combinations(free, k):
            common = base
            for i in extra:
                common &= a.images[i]
                if not common:
                    break
            found |= common
        if found:
            return found
    return 0


__all__ = [
    "ScoreReport",
    "EvaluationSystem",
    "incidence_matrix",
    "render_matrix",
    "scores",
    "optional_solutions",
    "perfect_solutions",
    "make_system",
    "system_join",
    "solve_system",
    "oracle_optional",
]
