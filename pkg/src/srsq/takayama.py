"""Degreewise local cohomology of monomial quotients via degree-selected
subcomplexes, and depth/Cohen-Macaulay verdicts for S/I, S/I^2 and S/I^(2).

The graded-piece formula implemented here (Takayama 2005; it specialises to
Hochster's formula for squarefree ideals) reads, with G_a = {i : a_i < 0} and
rho_i the maximum exponent of x_i over the minimal generators:

    dim_K H_m^i(S/I)_a = dim_K ~H_{i - |G_a| - 1}(Delta_a(I); K)
        when G_a is a face of Delta(I) and a_j <= rho_j - 1 for all j,
    and 0 otherwise.

Delta_a(I) is the subcomplex of Delta(I) of faces F disjoint from G_a such
that every minimal generator x^b admits an index i outside F and G_a with
b_i > a_i.  Since a piece only depends on a through G_a and the nonnegative
entries, depth scans range over a = -1 on a face G of Delta(I) and
0 <= a_j <= rho_j - 1 elsewhere; this space is finite and covers every degree
where a piece can be nonzero, so

    depth S/I = min { i : some scanned piece at i is nonzero },

with depth = dim S/I when nothing fires below the dimension (the top
cohomology never vanishes identically and is not scanned).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .bits import maximal_elements, unpack
from .complexes import SimplicialComplex, void_complex
from .homology import QQ, FieldSpec, HomologyProfile, profile_from_faces
from .ideals import MonomialIdeal, complex_of_ideal, stanley_reisner, symbolic_power

DEFAULT_BUDGET = 10**6


class BudgetExceeded(Exception):
    """The scan would need more homology evaluations than the budget allows."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"scan needs {required} homology evaluations, budget is {budget}"
        )


@dataclass(frozen=True)
class DegreeVector:
    """a in Z^n with its derived negative support G_a."""

    a: tuple[int, ...]

    @property
    def neg_support_mask(self) -> int:
        m = 0
        for i, e in enumerate(self.a):
            if e < 0:
                m |= 1 << i
        return m

    def neg_support(self) -> tuple[int, ...]:
        return unpack(self.neg_support_mask)


@dataclass(frozen=True)
class CohomologyWitness:
    """A nonvanishing graded piece: H_m^i(S/I)_a has dimension ``betti``."""

    i: int
    a: tuple[int, ...]
    homology_degree: int
    betti: int


@dataclass(frozen=True)
class DepthReport:
    field: FieldSpec
    depth: int
    dim: int
    is_cm: bool
    witness: CohomologyWitness | None
    scan_size: int


# -- the degree-selected subcomplex --------------------------------------------


def _delta_a_faces(
    faces: Sequence[int], gens: Sequence[tuple[int, ...]], g_mask: int, a: Sequence[int]
) -> list[int] | None:
    """Faces of Delta_a among ``faces``; None encodes the void complex.

    For each generator b, mb = {i outside G_a : b_i > a_i}; a face F survives
    iff it avoids G_a and every mb has a vertex outside F.  An empty mb kills
    every face including the empty one.
    """
    masks = []
    for b in gens:
        mb = 0
        for j, e in enumerate(b):
            if e and not g_mask >> j & 1 and e > a[j]:
                mb |= 1 << j
        if not mb:
            return None
        masks.append(mb)
    return [f for f in faces if not f & g_mask and all(mb & ~f for mb in masks)]


def _sorted_faces(delta: SimplicialComplex) -> list[int]:
    return sorted(delta.face_masks, key=lambda m: (m.bit_count(), unpack(m)))


def delta_a(ideal: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    """The subcomplex Delta_a(I) of Delta(I), by its facets (ambient labels).

    Follows the displayed definition directly; use delta_a_symbolic for the
    facet-sum shortcut available when I is a symbolic power and a >= 0.
    """
    if len(a) != ideal.n:
        raise ValueError("degree vector length must match the variable count")
    delta = complex_of_ideal(ideal)
    g_mask = DegreeVector(tuple(a)).neg_support_mask
    gens = tuple(g.exps for g in ideal.gens)
    faces = _delta_a_faces(_sorted_faces(delta), gens, g_mask, tuple(a))
    if faces is None:
        return void_complex(ideal.n)
    return SimplicialComplex(ideal.n, tuple(maximal_elements(faces)))


def delta_a_symbolic(delta: SimplicialComplex, a: Sequence[int], ell: int) -> SimplicialComplex:
    """Delta_a(I_Delta^(ell)) for a in N^n: the complex generated by the
    facets F of Delta with sum of a_i outside F at most ell - 1."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if any(e < 0 for e in a):
        raise ValueError("delta_a_symbolic needs a nonnegative degree (use delta_a)")
    if len(a) != delta.n:
        raise ValueError("degree vector length must match the vertex count")
    chosen = tuple(
        f for f in delta.facets if sum(e for i, e in enumerate(a) if not f >> i & 1) <= ell - 1
    )
    return SimplicialComplex(delta.n, chosen)


# -- graded pieces -------------------------------------------------------------


def local_cohomology_dim(
    ideal: MonomialIdeal, i: int, a: Sequence[int], field: FieldSpec = QQ
) -> int:
    """dim_K H_m^i(S/I)_a per the formula in the module docstring."""
    if ideal.is_unit():
        raise ValueError("local cohomology of the zero ring is rejected")
    delta = complex_of_ideal(ideal)
    dim_ring = delta.dim + 1
    if not 0 <= i <= dim_ring:
        raise ValueError(f"cohomological degree {i} out of range 0..{dim_ring}")
    dv = DegreeVector(tuple(a))
    g_mask = dv.neg_support_mask
    if not delta.contains_mask(g_mask):
        return 0
    rho = ideal.rho()
    if any(e > rho[j] - 1 for j, e in enumerate(a)):
        return 0
    gens = tuple(g.exps for g in ideal.gens)
    faces = _delta_a_faces(_sorted_faces(delta), gens, g_mask, tuple(a))
    if faces is None:
        return 0
    profile = profile_from_faces(faces, field)
    return profile.betti_number(i - g_mask.bit_count() - 1)


# -- the depth scan ------------------------------------------------------------


def _scan_size(faces: Sequence[int], rho: Sequence[int]) -> int:
    total = 0
    for g in faces:
        prod = 1
        for j, r in enumerate(rho):
            if not g >> j & 1:
                prod *= r
                if prod == 0:
                    break
        total += prod
    return total


def _scan_points(faces: Sequence[int], rho: Sequence[int], n: int):
    """(G, a) pairs in a fixed total order: faces sorted by (size, vertices),
    then the nonnegative part in lexicographic product order."""
    for g in faces:
        free = [j for j in range(n) if not g >> j & 1]
        base = [-1 if g >> j & 1 else 0 for j in range(n)]
        for combo in product(*(range(rho[j]) for j in free)):
            a = list(base)
            for j, e in zip(free, combo):
                a[j] = e
            yield g, tuple(a)


def depth_via_takayama(
    ideal: MonomialIdeal, field: FieldSpec = QQ, budget: int = DEFAULT_BUDGET
) -> DepthReport:
    """Depth of S/I by scanning graded pieces of local cohomology.

    The search space (see module docstring) is sized upfront; exceeding the
    budget raises BudgetExceeded rather than truncating.  The witness is the
    first nonvanishing piece in the fixed (i, a) order, so reports are
    deterministic regardless of evaluation strategy.
    """
    if ideal.is_unit():
        raise ValueError("depth of the zero ring is rejected")
    delta = complex_of_ideal(ideal)
    dim_ring = delta.dim + 1
    faces = _sorted_faces(delta)
    rho = ideal.rho()
    size = _scan_size(faces, rho)
    if size > budget:
        raise BudgetExceeded(size, budget)
    if dim_ring == 0:
        return DepthReport(field, 0, 0, True, None, size)
    gens = tuple(g.exps for g in ideal.gens)
    cache: dict[tuple[int, ...], HomologyProfile] = {}
    zero_profile = HomologyProfile(field, ())
    first_hit: dict[int, tuple[int, CohomologyWitness]] = {}
    for idx, (g_mask, a) in enumerate(_scan_points(faces, rho, ideal.n)):
        selected = _delta_a_faces(faces, gens, g_mask, a)
        if selected is None:
            continue
        key = tuple(selected)
        profile = cache.get(key)
        if profile is None:
            profile = profile_from_faces(selected, field)
            cache[key] = profile
        if profile.is_zero():
            continue
        shift = g_mask.bit_count() + 1
        for hom_degree in profile.degrees():
            if not profile.betti_number(hom_degree):
                continue
            i = hom_degree + shift
            if 0 <= i < dim_ring and i not in first_hit:
                first_hit[i] = (
                    idx,
                    CohomologyWitness(i, a, hom_degree, profile.betti_number(hom_degree)),
                )
    if first_hit:
        depth = min(first_hit)
        witness = first_hit[depth][1]
        return DepthReport(field, depth, dim_ring, depth == dim_ring, witness, size)
    return DepthReport(field, dim_ring, dim_ring, True, None, size)


# -- squares and symbolic squares ----------------------------------------------


def square_depth_report(
    delta: SimplicialComplex, field: FieldSpec = QQ, budget: int = DEFAULT_BUDGET
) -> DepthReport:
    return depth_via_takayama(stanley_reisner(delta).power(2), field, budget)


def symbolic_square_depth_report(
    delta: SimplicialComplex, field: FieldSpec = QQ, budget: int = DEFAULT_BUDGET
) -> DepthReport:
    return depth_via_takayama(symbolic_power(delta, 2), field, budget)


def is_cm_square_by_factors(
    delta: SimplicialComplex, field: FieldSpec = QQ, budget: int = DEFAULT_BUDGET
) -> bool:
    """Cohen-Macaulayness of S/I^2 via the finest join factorisation.

    The square of a Stanley-Reisner ideal of a join is Cohen-Macaulay iff the
    squares of all factors are; factors here are the join-irreducible blocks,
    each scanned directly.  Simplex factors contribute zero ideals (always
    Cohen-Macaulay).
    """
    verdict = True
    for factor in delta.join_factors():
        ideal = stanley_reisner(factor)
        if ideal.is_zero():
            continue
        verdict = verdict and depth_via_takayama(ideal.power(2), field, budget).is_cm
        if not verdict:
            break
    return verdict


def is_cm_square(
    delta: SimplicialComplex,
    field: FieldSpec = QQ,
    budget: int = DEFAULT_BUDGET,
    join_fallback: bool = True,
) -> bool:
    """Is S/I_Delta^2 Cohen-Macaulay over the field?

    Falls back to the join factorisation only when the direct scan exceeds
    the budget and the complex actually factors.
    """
    try:
        return square_depth_report(delta, field, budget).is_cm
    except BudgetExceeded:
        if not join_fallback or len(delta.join_factors()) == 1:
            raise
        return is_cm_square_by_factors(delta, field, budget)


def is_cm_symbolic_square(
    delta: SimplicialComplex, field: FieldSpec = QQ, budget: int = DEFAULT_BUDGET
) -> bool:
    """Is S/I_Delta^(2) Cohen-Macaulay over the field?"""
    return symbolic_square_depth_report(delta, field, budget).is_cm
