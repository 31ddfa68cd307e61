"""Degeneration (closure) order on diagrams, minimal degenerations, reductions.

The order is tested column by column: Gamma1 <= Gamma2 when every truncation
Gamma1^(k) has at most as many cells (plain case) or at most as many a's and
b's (ab case) as Gamma2^(k).  Covers are computed poset-theoretically inside
the full enumeration of valid diagrams, never from local move tables.

A cover (or any degeneration) Gamma1 < Gamma2 is a *reduction* when the drop
in defect equals the drop in centralizer dimension; finding one eliminates
Gamma1 as a strange-component candidate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .diagrams import (
    AbDiagram,
    PairParams,
    PairType,
    enumerate_diagrams,
    row_letter_counts,
    DEFAULT_BOUND,
)
from .errors import NotComparable, ShapeMismatch, WrongType
from .invariants import defect, dim_p_cent


@lru_cache(maxsize=None)
def _truncation_profile(diagram: AbDiagram) -> tuple:
    """Per truncation depth k >= 0: (cells,) for plain rows, (a-count, b-count)
    for ab rows; constant beyond the longest row."""
    max_len = diagram.rows[0][0] if diagram.rows else 0
    profile = []
    for k in range(max_len + 1):
        if diagram.is_ab:
            na = nb = 0
            for d, s in diagram.rows:
                if d > k:
                    start = s if k % 2 == 0 else ("b" if s == "a" else "a")
                    ca, cb = row_letter_counts(d - k, start)
                    na += ca
                    nb += cb
            profile.append((na, nb))
        else:
            profile.append((sum(d - k for d, _s in diagram.rows if d > k),))
    return tuple(profile)


def leq(g1: AbDiagram, g2: AbDiagram, pair_type: PairType) -> bool:
    """g1 <= g2 in the degeneration order."""
    if g1.n != g2.n:
        raise ShapeMismatch(f"sizes differ: {g1.n} vs {g2.n}")
    if g1.rows and g2.rows and g1.is_ab != g2.is_ab:
        raise ShapeMismatch("mixed plain and ab diagrams")
    if pair_type.uses_letters and g1.rows and g1.letter_counts() != g2.letter_counts():
        raise ShapeMismatch(
            f"signatures differ: {g1.letter_counts()} vs {g2.letter_counts()}"
        )
    p1 = _truncation_profile(g1)
    p2 = _truncation_profile(g2)
    depth = max(len(p1), len(p2))
    for k in range(depth):
        c1 = p1[k] if k < len(p1) else p1[-1]
        c2 = p2[k] if k < len(p2) else p2[-1]
        if any(x > y for x, y in zip(c1, c2)):
            return False
    return True


def lt(g1: AbDiagram, g2: AbDiagram, pair_type: PairType) -> bool:
    return g1 != g2 and leq(g1, g2, pair_type)


def minimal_degenerations(
    diagram: AbDiagram,
    pair_type: PairType,
    params: PairParams,
    bound: int = DEFAULT_BOUND,
) -> list[AbDiagram]:
    """Covers of the diagram in the poset of valid diagrams of the pair."""
    ups = [
        g
        for g in enumerate_diagrams(pair_type, params, bound)
        if lt(diagram, g, pair_type)
    ]
    return [g for g in ups if not any(lt(other, g, pair_type) for other in ups)]


def reduction_order(g1: AbDiagram, g2: AbDiagram, pair_type: PairType) -> int:
    """Delta = defect(g1) - defect(g2)."""
    return defect(g1, pair_type) - defect(g2, pair_type)


def centralizer_drop(
    g1: AbDiagram, g2: AbDiagram, pair_type: PairType, params: PairParams
) -> int:
    """s = dim p^{g1} - dim p^{g2}."""
    return dim_p_cent(g1, pair_type, params) - dim_p_cent(g2, pair_type, params)


def is_reduction(
    g1: AbDiagram, g2: AbDiagram, pair_type: PairType, params: PairParams
) -> bool:
    """g1 < g2 with defect drop equal to centralizer drop."""
    if not lt(g1, g2, pair_type):
        raise NotComparable(f"{g1.text()!r} is not strictly below {g2.text()!r}")
    return centralizer_drop(g1, g2, pair_type, params) == reduction_order(g1, g2, pair_type)


def find_reduction(
    diagram: AbDiagram,
    pair_type: PairType,
    params: PairParams,
    bound: int = DEFAULT_BOUND,
) -> Optional[AbDiagram]:
    """A minimal degeneration that is a reduction, if one exists.  When any
    reduction exists, one exists among the covers, so this search is complete."""
    for g2 in minimal_degenerations(diagram, pair_type, params, bound):
        if is_reduction(diagram, g2, pair_type, params):
            return g2
    return None


# -- the non-reducible motifs (BDI and CI) ------------------------------------


def matches_irreducible_motif(diagram: AbDiagram, pair_type: PairType) -> bool:
    """True when every defect-carrying length of an almost-distinguished
    diagram is blocked inside a non-reducible motif, i.e. no reduction exists.

    A defect length d (one a-row plus one b-row of length d) can shed its
    defect in two ways.  Growing one row of the pair by two and shrinking the
    other is defect-tight unless both neighbour lengths d-2 and d+2 are
    occupied, single-lettered and carry the same letter.  The innermost pair
    cannot shrink: for CI (d = 2) the two rows of the pair instead merge into
    one row of length 4 whose letter can be chosen freely, which always
    works; for BDI (d = 1) the pair must absorb the next occupied row, which
    fails when that row is not unique at its length, or when the merged row
    lands on a length occupied entirely by the opposite letter.
    """
    if pair_type not in (PairType.BDI, PairType.CI):
        raise WrongType("motifs are defined for BDI and CI only")
    mults = diagram.multiplicities()

    def mono_letter(d: int) -> Optional[str]:
        if d not in mults:
            return None
        _m, a, b = mults[d]
        if a and not b:
            return "a"
        if b and not a:
            return "b"
        return None

    for d, (m, a, b) in mults.items():
        if min(a, b) == 0:
            continue  # no defect at this length
        if pair_type is PairType.CI and d == 2:
            return False
        if pair_type is PairType.BDI and d == 1:
            above = [d2 for d2 in mults if d2 > d]
            if not above:
                continue  # nothing to absorb: blocked
            t = min(above)
            if mults[t][0] >= 2:
                continue  # a defect pair at t unblocks via t itself
            letter = mono_letter(t)
            landing = mono_letter(t + 2)
            if landing is not None and landing != letter:
                continue  # merging would create a new pair at t + 2
            return False
        lo, hi = mono_letter(d - 2), mono_letter(d + 2)
        if lo is not None and lo == hi:
            continue
        return False
    return True


# -- Hasse diagram --------------------------------------------------------------


@dataclass(frozen=True)
class DegenerationEdge:
    """A cover g1 < g2 annotated with s = dim p^{g1} - dim p^{g2} and
    delta = defect(g1) - defect(g2); the edge is a reduction when s = delta."""

    lower: AbDiagram
    upper: AbDiagram
    s: int
    delta: int
    is_reduction: bool


@dataclass(frozen=True)
class ClosureGraph:
    pair_type: PairType
    params: PairParams
    vertices: tuple[AbDiagram, ...]
    edges: tuple[DegenerationEdge, ...]

    def to_dot(self) -> str:
        lines = ["digraph closure {", "  rankdir=BT;"]
        from .invariants import orbit_invariants

        for v in self.vertices:
            inv = orbit_invariants(v, self.pair_type, self.params)
            label = f"{v.text() or 'zero'}\\n(dim {inv.dim_orbit}, delta {inv.defect})"
            lines.append(f'  "{v.text()}" [label="{label}"];')
        for e in self.edges:
            style = ' [color=red, penwidth=2, label="reduction"]' if e.is_reduction else ""
            lines.append(f'  "{e.lower.text()}" -> "{e.upper.text()}"{style};')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": [v.text() for v in self.vertices],
                "edges": [
                    {
                        "lower": e.lower.text(),
                        "upper": e.upper.text(),
                        "s": e.s,
                        "delta": e.delta,
                        "reduction": e.is_reduction,
                    }
                    for e in self.edges
                ],
            },
            indent=2,
        )


def closure_hasse(
    pair_type: PairType, params: PairParams, bound: int = DEFAULT_BOUND
) -> ClosureGraph:
    """Vertices are all valid diagrams, edges the covers with (s, delta)."""
    diagrams = enumerate_diagrams(pair_type, params, bound)
    edges = []
    for g1 in diagrams:
        for g2 in minimal_degenerations(g1, pair_type, params, bound):
            s = centralizer_drop(g1, g2, pair_type, params)
            if g1.rows:
                delta = reduction_order(g1, g2, pair_type)
            else:
                delta = 0
            edges.append(
                DegenerationEdge(
                    lower=g1, upper=g2, s=s, delta=delta, is_reduction=(s == delta)
                )
            )
    return ClosureGraph(
        pair_type=pair_type,
        params=params,
        vertices=tuple(diagrams),
        edges=tuple(edges),
    )
