"""The classification engine for classical pairs.

Every irreducible component of the nilpotent commuting variety is generated
by an almost-distinguished orbit; distinguished orbits give the components of
full dimension.  A strange-component candidate (almost-distinguished, not
distinguished) is eliminated either by a reduction (an explicit larger orbit
whose subvariety contains the candidate's) or, in the A cases, by a commuting
witness showing the nilpotent part of the centralizer escapes the orbit
closure.  Whatever survives is reported as unresolved, never suppressed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .closure import find_reduction
from .diagrams import (
    AbDiagram,
    PairParams,
    PairType,
    enumerate_diagrams,
    params_for,
    DEFAULT_BOUND,
)
from .errors import ClaimViolated
from .invariants import (
    ambient_dims,
    component_dim,
    is_almost_distinguished,
    is_distinguished,
)

COMPONENT = "Component"
ELIMINATED_BY_REDUCTION = "EliminatedByReduction"
ELIMINATED_BY_WITNESS = "EliminatedByWitness"
UNRESOLVED = "Unresolved"
NON_CANDIDATE = "NonCandidate"


@dataclass(frozen=True)
class CandidateStatus:
    diagram: AbDiagram
    status: str
    component_dim: int
    reduction_target: Optional[AbDiagram] = None
    witness_lengths: Optional[tuple[int, int]] = None

    def to_json(self) -> dict:
        out = {
            "orbit": self.diagram.text(),
            "status": self.status,
            "component_dim": self.component_dim,
        }
        if self.reduction_target is not None:
            out["reduction_target"] = self.reduction_target.text()
        if self.witness_lengths is not None:
            out["witness_lengths"] = list(self.witness_lengths)
        return out


def _adjacent_lengths(diagram: AbDiagram) -> Optional[tuple[int, int]]:
    lengths = sorted({d for d, _s in diagram.rows})
    for lo, hi in zip(lengths, lengths[1:]):
        if hi - lo == 1:
            return lo, hi
    return None


def candidate_status(
    diagram: AbDiagram,
    pair_type: PairType,
    params: PairParams,
    bound: int = DEFAULT_BOUND,
) -> CandidateStatus:
    """Classify a single orbit."""
    cdim = component_dim(diagram, pair_type, params)
    if not diagram.rows:
        # zero pair: its unique orbit generates the whole variety
        return CandidateStatus(diagram, COMPONENT, cdim)
    if is_distinguished(diagram, pair_type):
        return CandidateStatus(diagram, COMPONENT, cdim)
    if not is_almost_distinguished(diagram, pair_type):
        return CandidateStatus(diagram, NON_CANDIDATE, cdim)
    target = find_reduction(diagram, pair_type, params, bound)
    if target is not None:
        return CandidateStatus(
            diagram, ELIMINATED_BY_REDUCTION, cdim, reduction_target=target
        )
    if pair_type in (PairType.AI, PairType.AII):
        adj = _adjacent_lengths(diagram)
        if adj is not None:
            return CandidateStatus(diagram, ELIMINATED_BY_WITNESS, cdim, witness_lengths=adj)
    return CandidateStatus(diagram, UNRESOLVED, cdim)


@dataclass(frozen=True)
class ComponentsReport:
    pair_type: PairType
    params: PairParams
    dim_p: int
    components: tuple[CandidateStatus, ...]
    eliminated: tuple[CandidateStatus, ...]
    unresolved: tuple[CandidateStatus, ...]
    non_candidates: tuple[CandidateStatus, ...] = field(repr=False)

    @property
    def count_min(self) -> int:
        return len(self.components)

    @property
    def count_max(self) -> int:
        return len(self.components) + len(self.unresolved)

    @property
    def orbit_count(self) -> int:
        return (
            len(self.components)
            + len(self.eliminated)
            + len(self.unresolved)
            + len(self.non_candidates)
        )

    def to_json(self) -> dict:
        return {
            "pair": self.pair_type.value,
            "n": self.params.n,
            "signature": list(self.params.signature) if self.params.signature else None,
            "dim_p": self.dim_p,
            "components": [c.to_json() for c in self.components],
            "eliminated": [c.to_json() for c in self.eliminated],
            "unresolved": [c.to_json() for c in self.unresolved],
            "count_min": self.count_min,
            "count_max": self.count_max,
        }

    def render_text(self) -> str:
        head = f"{self.pair_type.value} n={self.params.n}"
        if self.params.signature:
            head += f" signature={self.params.signature}"
        lines = [head, f"dim p = {self.dim_p}"]
        lines.append(f"components ({len(self.components)}):")
        for c in self.components:
            lines.append(f"  {c.diagram.text() or '(zero)'}  dim {c.component_dim}")
        if self.eliminated:
            lines.append(f"eliminated candidates ({len(self.eliminated)}):")
            for c in self.eliminated:
                if c.status == ELIMINATED_BY_REDUCTION:
                    lines.append(
                        f"  {c.diagram.text()}  reduction -> {c.reduction_target.text()}"
                    )
                else:
                    lines.append(
                        f"  {c.diagram.text()}  witness on lengths {c.witness_lengths}"
                    )
        if self.unresolved:
            lines.append(f"unresolved ({len(self.unresolved)}):")
            for c in self.unresolved:
                lines.append(f"  {c.diagram.text()}  dim {c.component_dim}")
        lines.append(
            f"component count: {self.count_min}"
            + (f" to {self.count_max}" if self.unresolved else "")
        )
        return "\n".join(lines)


def classify_components(
    pair_type: PairType, params: PairParams, bound: int = DEFAULT_BOUND
) -> ComponentsReport:
    """Classify every orbit of the pair and assemble the report."""
    buckets = {COMPONENT: [], ELIMINATED_BY_REDUCTION: [], ELIMINATED_BY_WITNESS: [],
               UNRESOLVED: [], NON_CANDIDATE: []}
    for diagram in enumerate_diagrams(pair_type, params, bound):
        st = candidate_status(diagram, pair_type, params, bound)
        buckets[st.status].append(st)
    return ComponentsReport(
        pair_type=pair_type,
        params=params,
        dim_p=ambient_dims(pair_type, params).dim_p,
        components=tuple(buckets[COMPONENT]),
        eliminated=tuple(buckets[ELIMINATED_BY_REDUCTION] + buckets[ELIMINATED_BY_WITNESS]),
        unresolved=tuple(buckets[UNRESOLVED]),
        non_candidates=tuple(buckets[NON_CANDIDATE]),
    )


# -- the verified parameter grids ------------------------------------------------


def verified_grid() -> list[tuple[PairType, PairParams]]:
    """The parameter grid on which zero unresolved candidates is asserted:
    AI up to n = 5, AII up to n = 6, BDI for p <= 4 or q <= 2 within n <= 12,
    CI up to n = 14."""
    grid: list[tuple[PairType, PairParams]] = []
    for n in range(2, 6):
        grid.append((PairType.AI, PairParams(n)))
    for n in range(2, 7, 2):
        grid.append((PairType.AII, PairParams(n)))
    for n in range(3, 13):
        for q in range(1, n // 2 + 1):
            p = n - q
            if q <= 2 or p <= 4:
                grid.append((PairType.BDI, params_for(PairType.BDI, n, p, q)))
    for n in range(2, 15, 2):
        grid.append((PairType.CI, PairParams(n)))
    return grid


def rank_bound_check(
    pair_type: Optional[PairType] = None, bound: int = 16
) -> list[tuple[PairType, PairParams, int]]:
    """Run the classification over the verified grid (restricted to one family
    when pair_type is given); raise ClaimViolated on the first pair with an
    unresolved candidate.  Returns (pair, params, number of components)."""
    results = []
    for grid_type, params in verified_grid():
        if pair_type is not None and grid_type is not pair_type:
            continue
        report = classify_components(grid_type, params, bound=bound)
        if report.unresolved:
            orbit = report.unresolved[0].diagram
            raise ClaimViolated(
                f"{grid_type.value} {params} has unresolved candidate {orbit.text()!r}",
                pair=(grid_type, params),
                orbit=orbit,
            )
        results.append((grid_type, params, report.count_min))
    return results
