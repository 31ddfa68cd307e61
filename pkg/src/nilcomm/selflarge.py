"""Self-large orbits of the classical pairs.

An orbit is self-large when every nilpotent element of p^e already lies in
the orbit closure; only such orbits can generate a component.  For the
classical families the verdict is combinatorial: distinguished orbits always
qualify; for AI/AII the almost-distinguished orbits whose (paired) row
lengths differ pairwise by at least two; for BDI/CI exactly the
almost-distinguished orbits; for AIII/CII/DIII exactly the distinguished
ones.  The matrix oracle provides an equivalent criterion (p(e,0) a torus and
p(e,1) = 0) that the test suite checks against these rules pair by pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .diagrams import AbDiagram, PairParams, PairType
from .invariants import is_almost_distinguished, is_distinguished

DISTINGUISHED = "Distinguished"
TORUS_AND_NO_DEGREE_ONE = "TorusAndNoDegreeOne"
ADJACENT_LENGTH_WITNESS = "AdjacentLengthWitness"
PROP_7_4 = "Prop74"
DATA_TABLE = "DataTable"


@dataclass(frozen=True)
class SelfLargeVerdict:
    diagram: AbDiagram
    verdict: bool
    reason: str

    def to_json(self) -> dict:
        return {
            "orbit": self.diagram.text(),
            "self_large": self.verdict,
            "reason": self.reason,
        }


def _paired_lengths(diagram: AbDiagram, pair_type: PairType) -> list[int]:
    lengths = [d for d, _s in diagram.rows]
    if pair_type is PairType.AII:
        return lengths[0::2]  # rows come in equal pairs for almost-distinguished
    return lengths


def _all_gaps_at_least_two(diagram: AbDiagram, pair_type: PairType) -> bool:
    lengths = sorted(set(_paired_lengths(diagram, pair_type)), reverse=True)
    return all(hi - lo >= 2 for hi, lo in zip(lengths, lengths[1:]))


def is_self_large(diagram: AbDiagram, pair_type: PairType) -> SelfLargeVerdict:
    """Combinatorial verdict, with the reason recorded."""
    if not diagram.rows:
        # zero pair: its only orbit is trivially distinguished
        return SelfLargeVerdict(diagram, True, DISTINGUISHED)
    if is_distinguished(diagram, pair_type):
        return SelfLargeVerdict(diagram, True, DISTINGUISHED)
    if not is_almost_distinguished(diagram, pair_type):
        return SelfLargeVerdict(diagram, False, DATA_TABLE)
    if pair_type in (PairType.AI, PairType.AII):
        if _all_gaps_at_least_two(diagram, pair_type):
            return SelfLargeVerdict(diagram, True, TORUS_AND_NO_DEGREE_ONE)
        return SelfLargeVerdict(diagram, False, ADJACENT_LENGTH_WITNESS)
    if pair_type in (PairType.BDI, PairType.CI):
        return SelfLargeVerdict(diagram, True, DATA_TABLE)
    # AIII, CII, DIII: almost-distinguished but not distinguished cannot occur
    return SelfLargeVerdict(diagram, False, DATA_TABLE)


def verify_self_large_criterion(
    diagram: AbDiagram, pair_type: PairType, params: PairParams, seed: int = 0
) -> bool:
    """Oracle evaluation of the two-part criterion: p(e,0) = 0, or p(e,0) is a
    torus and p(e,1) = 0."""
    real = oracle.realize(diagram, pair_type, params)
    dim_p0 = oracle.dim_graded(real, 0, -1)
    if dim_p0 == 0:
        return True
    if oracle.defect_oracle(real, seed=seed) != dim_p0:
        return False  # p(e,0) contains nonzero nilpotents
    return oracle.dim_graded(real, 1, -1) == 0
