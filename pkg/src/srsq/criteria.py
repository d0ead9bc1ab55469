"""First-class checks with certificates: the diameter depth criterion, the
linkwise (S2) criterion, the brute-force union/intersection condition on
non-face triples, and the per-instance implication audit.

The audit computes every verdict for one complex and then asserts the
implications that must hold between them; any violation is flagged and
treated by the CLI as a critical bug (exit code 4).  The exploration harness
runs audits over seeded random pure complexes and never asserts anything
beyond those implications.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .bits import pack, unpack
from .complexes import SimplicialComplex, new_complex
from .homology import (
    DEFAULT_FIELDS,
    FieldSpec,
    GorensteinReport,
    LocallyGorensteinReport,
    is_gorenstein,
    is_locally_gorenstein,
)
from .ideals import Sym2Result, stanley_reisner, symbolic2_equals_square
from .takayama import (
    DEFAULT_BUDGET,
    DepthReport,
    square_depth_report,
    symbolic_square_depth_report,
)

CONDITION3_DEFAULT_BOUND = 9


@dataclass(frozen=True)
class Depth2Result:
    """diam of the 1-skeleton <= 2, the depth >= 2 criterion for S/I^(2)."""

    holds: bool
    diameter: float


def depth2_criterion(delta: SimplicialComplex) -> Depth2Result:
    if delta.dim < 1:
        raise ValueError("the diameter criterion needs dim >= 1")
    diameter = delta.one_skeleton().diameter()
    return Depth2Result(diameter <= 2, diameter)


@dataclass(frozen=True)
class S2Result:
    """Linkwise diameter criterion, equivalent to (S2) for S/I^(2) (pure input)."""

    holds: bool
    witness_face: tuple[int, ...] | None = None
    witness_diameter: float | None = None


def s2_criterion(delta: SimplicialComplex) -> S2Result:
    """For every face F (the empty face included) whose link has dimension
    >= 1, the link's 1-skeleton must have diameter <= 2."""
    if not delta.is_pure():
        raise ValueError("the (S2) criterion is stated for pure complexes")
    for f in sorted(delta.face_masks, key=lambda m: (m.bit_count(), unpack(m))):
        link = delta.link(unpack(f))
        if link.dim < 1:
            continue
        diameter = link.one_skeleton().diameter()
        if diameter > 2:
            return S2Result(False, unpack(f), diameter)
    return S2Result(True)


@dataclass(frozen=True)
class Condition3Result:
    """Union/intersection condition over all triples of non-faces.

    holds is True when for every F1, F2, F3 not in Delta there are non-faces
    G1, G2 with G1 u G2 inside F1 u F2 u F3 and G1 n G2 inside F1 n F2 n F3.
    The witness is a failing triple.
    """

    holds: bool
    witness: tuple[tuple[int, ...], ...] | None = None


def condition3_check(
    delta: SimplicialComplex, max_vertices: int = CONDITION3_DEFAULT_BOUND
) -> Condition3Result:
    """Brute force over all non-face triples, deduplicated by (union,
    intersection) signatures; no reduction to minimal non-faces is used."""
    n = delta.n
    if n > max_vertices:
        raise ValueError(
            f"the non-face triple brute force is capped at n <= {max_vertices}, got n = {n}"
        )
    full = (1 << n) - 1
    faces = delta.face_masks
    nonfaces = [m for m in range(full + 1) if m not in faces]
    if not nonfaces:
        return Condition3Result(True)

    nfset = set(nonfaces)
    # has_nonface_inside[m]: some non-face is a subset of m.  Non-faces are
    # upward closed, so one bit-removal step per mask suffices.
    hnf = bytearray(full + 1)
    for m in range(full + 1):
        if m in nfset:
            hnf[m] = 1
            continue
        mm = m
        while mm:
            b = mm & -mm
            if hnf[m ^ b]:
                hnf[m] = 1
                break
            mm ^= b

    pair_sigs: dict[tuple[int, int], tuple[int, int]] = {}
    for i, f1 in enumerate(nonfaces):
        for f2 in nonfaces[i:]:
            key = (f1 | f2, f1 & f2)
            if key not in pair_sigs:
                pair_sigs[key] = (f1, f2)
    triple_sigs: dict[tuple[int, int], tuple[int, int, int]] = {}
    for (u2, w2), (f1, f2) in pair_sigs.items():
        for f3 in nonfaces:
            key = (u2 | f3, w2 & f3)
            if key not in triple_sigs:
                triple_sigs[key] = (f1, f2, f3)

    def satisfiable(u: int, w: int) -> bool:
        for g1 in nonfaces:
            if g1 & ~u:
                continue
            if hnf[u & ~(g1 & ~w)]:
                return True
        return False

    for (u, w), triple in triple_sigs.items():
        if not satisfiable(u, w):
            return Condition3Result(False, tuple(unpack(t) for t in triple))
    return Condition3Result(True)


# -- the per-instance audit ------------------------------------------------------


@dataclass
class AuditReport:
    """Every verdict for one complex plus the implication violations found.

    An empty ``violations`` tuple is the expected outcome; anything else
    means a result contradicts an implication that is supposed to hold and
    should be treated as a bug (or a counterexample candidate worth keeping).
    """

    delta: SimplicialComplex
    fields: tuple[FieldSpec, ...]
    dim_ring: int
    pure: bool
    gorenstein: dict[FieldSpec, GorensteinReport]
    locally_gorenstein: dict[FieldSpec, LocallyGorensteinReport]
    depth2: Depth2Result | None
    s2: S2Result | None
    sym2: Sym2Result
    condition3: Condition3Result | None
    cm_square: dict[FieldSpec, DepthReport]
    cm_symbolic_square: dict[FieldSpec, DepthReport]
    violations: tuple[str, ...] = ()

    @property
    def cm_square_battery(self) -> bool:
        return all(r.is_cm for r in self.cm_square.values())


def _audit_violations(report: AuditReport) -> tuple[str, ...]:
    out: list[str] = []
    if report.cm_square_battery:
        if not all(r.is_gorenstein for r in report.gorenstein.values()):
            out.append("CM square over the battery but not Gorenstein")
        if report.s2 is not None and not report.s2.holds:
            out.append("CM square over the battery but the linkwise diameter criterion fails")
        if not report.sym2.equal:
            out.append("CM square over the battery but I^2 != I^(2)")
        if not all(r.holds for r in report.locally_gorenstein.values()):
            out.append("CM square over the battery but not locally Gorenstein")
    for f in report.fields:
        direct = report.cm_square[f].is_cm
        combined = report.cm_symbolic_square[f].is_cm and report.sym2.equal
        if direct != combined:
            out.append(
                f"over {f.name}: CM(I^2) = {direct} but CM(I^(2)) and I^2 = I^(2) "
                f"give {combined}"
            )
        if report.depth2 is not None:
            sym_depth_ok = report.cm_symbolic_square[f].depth >= 2
            if report.depth2.holds != sym_depth_ok:
                out.append(
                    f"over {f.name}: diameter criterion = {report.depth2.holds} but "
                    f"depth S/I^(2) >= 2 is {sym_depth_ok}"
                )
    if report.condition3 is not None and report.condition3.holds != report.sym2.equal:
        out.append(
            "non-face triple brute force disagrees with the special-triangle criterion"
        )
    return tuple(out)


def paper_audit(
    delta: SimplicialComplex,
    fields: Sequence[FieldSpec] = DEFAULT_FIELDS,
    budget: int = DEFAULT_BUDGET,
    condition3_bound: int = CONDITION3_DEFAULT_BOUND,
) -> AuditReport:
    """Compute all criteria for one complex and check the implications.

    The non-face triple condition is only brute-forced when n is within the
    configured bound; the special-triangle criterion stands in for it above
    the bound (the two are equivalent and cross-checked whenever both are
    computed).  Budget errors from the depth scans propagate.
    """
    fields = tuple(fields)
    ideal = stanley_reisner(delta)
    report = AuditReport(
        delta=delta,
        fields=fields,
        dim_ring=delta.dim + 1,
        pure=delta.is_pure(),
        gorenstein={f: is_gorenstein(delta, f) for f in fields},
        locally_gorenstein={f: is_locally_gorenstein(delta, f) for f in fields},
        depth2=depth2_criterion(delta) if delta.dim >= 1 else None,
        s2=s2_criterion(delta) if delta.is_pure() else None,
        sym2=symbolic2_equals_square(ideal),
        condition3=condition3_check(delta, condition3_bound)
        if delta.n <= condition3_bound
        else None,
        cm_square={f: square_depth_report(delta, f, budget) for f in fields},
        cm_symbolic_square={
            f: symbolic_square_depth_report(delta, f, budget) for f in fields
        },
    )
    report.violations = _audit_violations(report)
    return report


# -- the exploration harness -----------------------------------------------------


def random_pure_complex(
    rng: random.Random, n: int, facet_size: int | None = None
) -> SimplicialComplex:
    """Seeded random pure complex covering all n vertices, dim >= 1."""
    if n < 3:
        raise ValueError("need n >= 3 for interesting pure complexes")
    d = facet_size if facet_size is not None else rng.randint(2, max(2, min(n - 1, 4)))
    pool = list(combinations(range(1, n + 1), d))
    full = (1 << n) - 1
    while True:
        k = rng.randint(max(1, n // d), len(pool))
        chosen = rng.sample(pool, k)
        support = 0
        for c in chosen:
            support |= pack(c)
        if support == full:
            return new_complex(n, chosen)


def explore_complexes(seed: int, count: int, n_max: int) -> list[SimplicialComplex]:
    """The deterministic complex stream behind explore_random."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(3, max(3, n_max))
        out.append(random_pure_complex(rng, n))
    return out


def explore_random(
    seed: int,
    count: int,
    n_max: int,
    fields: Sequence[FieldSpec] = DEFAULT_FIELDS,
    budget: int = DEFAULT_BUDGET,
    condition3_bound: int = CONDITION3_DEFAULT_BOUND,
) -> list[AuditReport]:
    """Audit ``count`` seeded random pure complexes with 3 <= n <= n_max.

    Deterministic for a fixed seed.  Violations are reported, never asserted;
    callers decide whether to dump them as counterexample candidates.
    """
    return [
        paper_audit(delta, fields=fields, budget=budget, condition3_bound=condition3_bound)
        for delta in explore_complexes(seed, count, n_max)
    ]
