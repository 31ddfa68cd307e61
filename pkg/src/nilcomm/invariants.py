"""Numerical invariants of a nilpotent orbit computed from its diagram.

The centralizer of the standard triple of an orbit decomposes, one reductive
symmetric pair per occupied row length; which pair occurs is dictated by the
pair type and the parity of the length.  Defect, torus dimensions and
distinguishedness all read off these descriptors.  dim p^e has closed forms
for some families and otherwise delegates to the exact matrix oracle; every
combinatorial path here is cross-certified against the oracle by the test
suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import oracle
from .diagrams import AbDiagram, PairParams, PairType
from .errors import EmptyDiagram, EvenRowPresent

A_TYPES = (PairType.AI, PairType.AII, PairType.AIII)


@dataclass(frozen=True)
class PairDescriptor:
    """One reductive symmetric pair in the centralizer decomposition: the
    block attached to row length d, with sizes (m, a, b) taken from the
    diagram."""

    kind: str  # 'gl_so' | 'gl_sp' | 'gl_glgl' | 'so_soso' | 'sp_gl' | 'so_gl' | 'sp_spsp'
    d: int
    m: int
    a: int = 0
    b: int = 0

    @property
    def rank(self) -> int:
        """Dimension of a maximal torus in the (-1)-eigenspace of the pair."""
        if self.kind == "gl_so":
            return self.m
        if self.kind in ("gl_sp", "sp_gl"):
            return self.m // 2
        if self.kind in ("gl_glgl", "so_soso"):
            return min(self.a, self.b)
        if self.kind == "so_gl":
            return self.m // 4
        if self.kind == "sp_spsp":
            return min(self.a, self.b) // 2
        raise ValueError(self.kind)

    @property
    def dim_p_part(self) -> int:
        """Dimension of the (-1)-eigenspace of the pair."""
        m, a, b = self.m, self.a, self.b
        if self.kind == "gl_so":
            return m * (m + 1) // 2
        if self.kind == "gl_sp":
            return m * (m - 1) // 2
        if self.kind == "gl_glgl":
            return 2 * a * b
        if self.kind == "so_soso":
            return a * b
        if self.kind == "sp_gl":
            return m * m // 4 + m // 2
        if self.kind == "so_gl":
            return m * m // 4 - m // 2
        if self.kind == "sp_spsp":
            return a * b
        raise ValueError(self.kind)

    def label(self) -> str:
        m, a, b = self.m, self.a, self.b
        names = {
            "gl_so": (f"gl_{m}", f"so_{m}"),
            "gl_sp": (f"gl_{m}", f"sp_{m}"),
            "gl_glgl": (f"gl_{m}", f"gl_{a} + gl_{b}"),
            "so_soso": (f"so_{m}", f"so_{a} x so_{b}"),
            "sp_gl": (f"sp_{m}", f"gl_{m // 2}"),
            "so_gl": (f"so_{m}", f"gl_{m // 2}"),
            "sp_spsp": (f"sp_{m}", f"sp_{a} x sp_{b}"),
        }
        g, k = names[self.kind]
        return f"({g}, {k})"


_DESCRIPTOR_KIND = {
    # pair type -> (kind for odd d, kind for even d)
    PairType.AI: ("gl_so", "gl_so"),
    PairType.AII: ("gl_sp", "gl_sp"),
    PairType.AIII: ("gl_glgl", "gl_glgl"),
    PairType.BDI: ("so_soso", "sp_gl"),
    PairType.CI: ("sp_gl", "so_soso"),
    PairType.DIII: ("so_gl", "sp_spsp"),
    PairType.CII: ("sp_spsp", "so_gl"),
}


def centralizer_pairs(diagram: AbDiagram, pair_type: PairType) -> tuple[PairDescriptor, ...]:
    """The reductive symmetric pair attached to each occupied length."""
    out = []
    for d, (m, a, b) in diagram.multiplicities().items():
        kind = _DESCRIPTOR_KIND[pair_type][0 if d % 2 else 1]
        out.append(PairDescriptor(kind=kind, d=d, m=m, a=a, b=b))
    return tuple(out)


def defect_per_length(diagram: AbDiagram, pair_type: PairType, d: int) -> int:
    for desc in centralizer_pairs(diagram, pair_type):
        if desc.d == d:
            return desc.rank
    return 0


def defect(diagram: AbDiagram, pair_type: PairType) -> int:
    """Rank of p(e,0).  In the A cases the ambient gl-centralizer carries one
    extra central torus dimension inside p for AI/AII (the identity is
    theta-negative there), which the trace condition removes; for AIII the
    identity lies in k and no correction applies."""
    if not diagram.rows:
        raise EmptyDiagram("defect of the empty diagram is the rank of the pair")
    total = sum(desc.rank for desc in centralizer_pairs(diagram, pair_type))
    if pair_type in (PairType.AI, PairType.AII):
        total -= 1
    return total


def dim_p0(diagram: AbDiagram, pair_type: PairType) -> int:
    """dim p(e,0), summed over the centralizer descriptors."""
    total = sum(desc.dim_p_part for desc in centralizer_pairs(diagram, pair_type))
    if diagram.rows and pair_type in (PairType.AI, PairType.AII):
        total -= 1
    return total


def is_distinguished(diagram: AbDiagram, pair_type: PairType) -> bool:
    mults = diagram.multiplicities()
    if pair_type is PairType.AI:
        return len(diagram.rows) == 1
    if pair_type is PairType.AII:
        return len(diagram.rows) == 2 and len(mults) == 1
    if pair_type is PairType.AIII:
        return all(a == 0 or b == 0 for _m, a, b in mults.values())
    if pair_type is PairType.BDI:
        return all(d % 2 == 1 and (a == 0 or b == 0) for d, (_m, a, b) in mults.items())
    if pair_type is PairType.CI:
        return all(d % 2 == 0 and (a == 0 or b == 0) for d, (_m, a, b) in mults.items())
    if pair_type is PairType.CII:
        return all(
            (a == 0 or b == 0) if d % 2 else m <= 2 for d, (m, a, b) in mults.items()
        )
    if pair_type is PairType.DIII:
        return all(
            m <= 2 if d % 2 else (a == 0 or b == 0) for d, (m, a, b) in mults.items()
        )
    raise ValueError(pair_type)


def is_almost_distinguished(diagram: AbDiagram, pair_type: PairType) -> bool:
    """p(e,0) is a torus: no descriptor block carries nonzero nilpotents."""
    mults = diagram.multiplicities()
    if pair_type is PairType.AI:
        return all(m == 1 for m, _a, _b in mults.values())
    if pair_type is PairType.AII:
        return all(m == 2 for m, _a, _b in mults.values())
    if pair_type is PairType.BDI:
        return all(d % 2 == 1 and a * b <= 1 for d, (_m, a, b) in mults.items())
    if pair_type is PairType.CI:
        return all(d % 2 == 0 and a * b <= 1 for d, (_m, a, b) in mults.items())
    # AIII, CII, DIII: almost-distinguished coincides with distinguished
    return is_distinguished(diagram, pair_type)


def is_even(diagram: AbDiagram) -> bool:
    """All eigenvalues of ad h are even, i.e. all row lengths share a parity."""
    parities = {d % 2 for d, _s in diagram.rows}
    return len(parities) <= 1


def _cells(diagram: AbDiagram) -> list[tuple[int, int]]:
    """(weight, involution sign) of every basis cell; sign is 1 for plain rows."""
    out = []
    for d, s in diagram.rows:
        base = 1 if s in (None, "a") else -1
        for a in range(d):
            out.append((2 * a - d + 1, base * (-1) ** a))
    return out


def graded_theta_dims(diagram: AbDiagram, pair_type: PairType, j: int) -> tuple[int, int]:
    """(dim k(j,h), dim p(j,h)): the theta-eigenspace dimensions of the weight-j
    part of the ambient algebra, counted on cells of the diagram."""
    cells = _cells(diagram)
    cut = 1 if (j == 0 and cells) else 0  # remove the trace direction of gl
    if pair_type in A_TYPES:
        if pair_type is PairType.AIII:
            nk = np = 0
            for mu_k, d_k in cells:
                for mu_l, d_l in cells:
                    if mu_k - mu_l == j:
                        if d_k * d_l == 1:
                            nk += 1
                        else:
                            np += 1
            return (nk - cut, np)
        # AI/AII: theta permutes the matrix-unit basis; its fixed elements are
        # the units E_{k, dual(k)}, of weight 2*mu_k, all with sign -1 (AI)
        # or +1 (AII)
        total = 0
        for mu_k, _ in cells:
            for mu_l, _ in cells:
                if mu_k - mu_l == j:
                    total += 1
        fixed = sum(1 for mu, _ in cells if 2 * mu == j)
        if pair_type is PairType.AI:
            nk, np = (total - fixed) // 2, (total + fixed) // 2
        else:
            nk, np = (total + fixed) // 2, (total - fixed) // 2
        return (nk, np - cut)
    # orthogonal/symplectic: g is spanned by cell pairs (k < l, resp. k <= l)
    # of weight mu_k + mu_l; the involution sign of a pair is xi~ d_k d_l where
    # xi~ = +1 when J^2 = Id and -1 when J^2 = -Id
    sym = pair_type.form_sign == -1  # symplectic: pairs k <= l
    xi_tilde = pair_type.involution_square
    nk = np = 0
    for idx_k, (mu_k, d_k) in enumerate(cells):
        for idx_l, (mu_l, d_l) in enumerate(cells):
            if idx_l < idx_k or (idx_l == idx_k and not sym):
                continue
            if mu_k + mu_l != j:
                continue
            if xi_tilde * d_k * d_l == 1:
                nk += 1
            else:
                np += 1
    return (nk, np)


def dim_p_graded(diagram: AbDiagram, pair_type: PairType, i: int) -> int:
    """dim p(e,i) for i >= 0: the raising map is onto, so the kernel dimension
    is dim p(i,h) - dim k(i+2,h)."""
    _k_i, p_i = graded_theta_dims(diagram, pair_type, i)
    k_next, _p_next = graded_theta_dims(diagram, pair_type, i + 2)
    return p_i - k_next


def dim_k_graded(diagram: AbDiagram, pair_type: PairType, i: int) -> int:
    """dim k(e,i) for i >= 0."""
    k_i, _p_i = graded_theta_dims(diagram, pair_type, i)
    _k_next, p_next = graded_theta_dims(diagram, pair_type, i + 2)
    return k_i - p_next


def k_profile(diagram: AbDiagram) -> tuple[int, ...]:
    """Column profile of an all-odd-rows diagram: entry j is the length of
    column 2j+1, i.e. the number of rows of length >= 2j+1."""
    if any(d % 2 == 0 for d, _s in diagram.rows):
        raise EvenRowPresent("profile needs all rows of odd length")
    if not diagram.rows:
        return ()
    top = (diagram.rows[0][0] + 1) // 2
    return tuple(sum(1 for d, _s in diagram.rows if d >= 2 * j + 1) for j in range(top))


@dataclass(frozen=True)
class AmbientDims:
    dim_p: int
    rank_p: int
    dim_k: int


def ambient_dims(pair_type: PairType, params: PairParams) -> AmbientDims:
    """Dimensions of the ambient symmetric pair."""
    params.check(pair_type)
    n = params.n
    if pair_type is PairType.AI:
        return AmbientDims(n * (n + 1) // 2 - 1 if n else 0, max(n - 1, 0), n * (n - 1) // 2)
    if pair_type is PairType.AII:
        return AmbientDims(n * (n - 1) // 2 - 1 if n else 0, max(n // 2 - 1, 0), n * (n + 1) // 2)
    if pair_type is PairType.AIII:
        p, q = params.signature
        return AmbientDims(2 * p * q, min(p, q), p * p + q * q - 1 if n else 0)
    if pair_type is PairType.BDI:
        p, q = params.signature
        return AmbientDims(p * q, min(p, q), p * (p - 1) // 2 + q * (q - 1) // 2)
    if pair_type is PairType.CI:
        return AmbientDims(n * n // 4 + n // 2, n // 2, n * n // 4)
    if pair_type is PairType.CII:
        p, q = params.signature
        return AmbientDims(p * q, min(p, q) // 2, p * (p + 1) // 2 + q * (q + 1) // 2)
    if pair_type is PairType.DIII:
        return AmbientDims(n * n // 4 - n // 2, n // 4, n * n // 4)
    raise ValueError(pair_type)


@lru_cache(maxsize=None)
def dim_p_cent(diagram: AbDiagram, pair_type: PairType, params: PairParams) -> int:
    """dim p^e.  Closed forms: AI for every partition; AIII by counting the
    theta-negative part of the commutant; BDI with all rows odd and CI with
    all rows even (the element is then even and dim g^h is a column-profile
    count).  Any other shape goes to the matrix oracle."""
    if pair_type is PairType.AI:
        return sum(j * d for j, (d, _s) in enumerate(diagram.rows, start=1)) - (
            1 if diagram.rows else 0
        )
    if pair_type is PairType.AIII:
        return _dim_p_cent_a3(diagram)
    amb = ambient_dims(pair_type, params)
    dim_g = amb.dim_p + amb.dim_k
    if pair_type is PairType.BDI and all(d % 2 == 1 for d, _s in diagram.rows):
        # even element: dim p^e = dim p - (dim g - dim g^h)/2, with g^h given
        # by the column profile (orthogonal piece in degree 0, gl above)
        prof = k_profile(diagram)
        k0 = prof[0] if prof else 0
        dim_gh = k0 * (k0 - 1) // 2 + sum(k * k for k in prof[1:])
        return amb.dim_p - (dim_g - dim_gh) // 2
    if pair_type is PairType.CI and all(d % 2 == 0 for d, _s in diagram.rows):
        # even element with all weights of V odd: g^h is a sum of gl blocks
        weights = []
        j = 0
        while True:
            w = sum(1 for d, _s in diagram.rows if d >= 2 * j + 2)
            if w == 0:
                break
            weights.append(w)
            j += 1
        dim_gh = sum(w * w for w in weights)
        return amb.dim_p - (dim_g - dim_gh) // 2
    return oracle.dim_p_cent_oracle(oracle.realize(diagram, pair_type, params))


def _dim_p_cent_a3(diagram: AbDiagram) -> int:
    """Count commutant basis maps between rows whose involution sign is -1."""
    total = 0
    for d1, s1 in diagram.rows:
        for d2, s2 in diagram.rows:
            lo = max(0, d2 - d1)
            length = min(d1, d2)
            # shifts r in [lo, lo+length) with sign s1*s2*(-1)^r = -1
            want_odd = s1 == s2
            first = lo if (lo % 2 == 1) == want_odd else lo + 1
            if first < lo + length:
                total += (lo + length - first + 1) // 2
    return total


def dim_orbit(diagram: AbDiagram, pair_type: PairType, params: PairParams) -> int:
    return ambient_dims(pair_type, params).dim_p - dim_p_cent(diagram, pair_type, params)


def component_dim(diagram: AbDiagram, pair_type: PairType, params: PairParams) -> int:
    """dim of the commuting-variety subvariety generated by the orbit."""
    amb = ambient_dims(pair_type, params)
    if not diagram.rows:
        return amb.dim_p  # zero pair: the single point has full dimension 0
    return amb.dim_p - defect(diagram, pair_type)


@dataclass(frozen=True)
class OrbitInvariants:
    defect: int
    dim_p_cent: int
    dim_orbit: int
    dim_p0: int
    distinguished: bool
    almost: bool
    even: bool
    component_dim: int

    def to_json(self) -> dict:
        return {
            "defect": self.defect,
            "dim_p_cent": self.dim_p_cent,
            "dim_orbit": self.dim_orbit,
            "dim_p0": self.dim_p0,
            "distinguished": self.distinguished,
            "almost": self.almost,
            "component_dim": self.component_dim,
        }


def orbit_invariants(
    diagram: AbDiagram, pair_type: PairType, params: PairParams
) -> OrbitInvariants:
    return OrbitInvariants(
        defect=defect(diagram, pair_type),
        dim_p_cent=dim_p_cent(diagram, pair_type, params),
        dim_orbit=dim_orbit(diagram, pair_type, params),
        dim_p0=dim_p0(diagram, pair_type),
        distinguished=is_distinguished(diagram, pair_type),
        almost=is_almost_distinguished(diagram, pair_type),
        even=is_even(diagram),
        component_dim=component_dim(diagram, pair_type, params),
    )
