"""Generators for small universes and exhaustive theorem verification.

Semilattices are enumerated as labeled meet tables with the zero pinned
to the first element, optionally one representative per isomorphism
class (canonical form: lexicographically least table over relabelings).
Codomains are powerset algebras, which lose no generality for unital
codomains.  The searches stream lazily and deterministically: two runs
over the same spec produce identical streams.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .lattices import (
    FiniteGenBoolAlg,
    FiniteMeetSemilattice,
    ValidationError,
    is_ideal,
)
from .representations import (
    Representation,
    TightnessReport,
    _graded_subsets,
    antichains,
    constrained_interval,
    covers_of,
    is_cover_to_join,
    is_nondegenerate,
    is_tight,
    tighten,
)


@dataclass(frozen=True)
class UniverseSpec:
    """Bounds for a search universe.

    Semilattices of every size from 1 up to max_semilattice_size are
    paired with one powerset codomain per entry of atom_counts.
    """
    max_semilattice_size: int
    atom_counts: tuple[int, ...]
    up_to_iso: bool = False

    def __post_init__(self):
        if self.max_semilattice_size < 1:
            raise ValidationError("max semilattice size must be at least 1")
        if not self.atom_counts:
            raise ValidationError("atom counts must be nonempty")
        if any(k < 0 for k in self.atom_counts):
            raise ValidationError("atom counts must be nonnegative")


@dataclass(frozen=True)
class GapExample:
    """A representation that is cover-to-join but not tight (full view)."""
    semilattice: FiniteMeetSemilattice
    algebra: FiniteGenBoolAlg
    representation: Representation
    report: TightnessReport


def _meet_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All meet tables on 0..n-1 with zero 0, as index tables.

    Backtracks over the free entries (i, j) with 1 <= i < j in
    lexicographic order; values run over 0..n-1, so the stream is ordered
    by the assignment vector.  A candidate value v for entry (i, j) must
    already satisfy v ∧ i = v and v ∧ j = v wherever those entries are
    determined; associativity is checked in full at the leaves.
    """
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        table[i][i] = i
        table[0][i] = table[i][0] = 0
    pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
    unset = object()
    for i, j in pairs:
        table[i][j] = table[j][i] = unset

    def lookup(a, b):
        if a == b:
            return a
        if a == 0 or b == 0:
            return 0
        v = table[min(a, b)][max(a, b)]
        return None if v is unset else v

    def associative():
        rng = range(n)
        for a in rng:
            for b in rng:
                ab = table[a][b]
                for c in rng:
                    if table[ab][c] != table[a][table[b][c]]:
                        return False
        return True

    def backtrack(k):
        if k == len(pairs):
            if associative():
                yield tuple(tuple(row) for row in table)
            return
        i, j = pairs[k]
        for v in range(n):
            if v not in (0, i, j):
                if lookup(v, i) not in (None, v) or lookup(v, j) not in (None, v):
                    continue
            table[i][j] = table[j][i] = v
            yield from backtrack(k + 1)
        table[i][j] = table[j][i] = unset

    yield from backtrack(0)


def canonical_meet_table(table: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least relabeling of an index meet table.

    Relabelings fix 0 (any isomorphism maps the zero to the zero, since
    it is the unique minimum).
    """
    n = len(table)
    best = tuple(tuple(row) for row in table)
    for perm in permutations(range(1, n)):
        sigma = (0,) + perm
        relabeled = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                relabeled[sigma[a]][sigma[b]] = sigma[table[a][b]]
        candidate = tuple(tuple(row) for row in relabeled)
        if candidate < best:
            best = candidate
    return best


def enumerate_semilattices(n: int, up_to_iso: bool = False
                           ) -> Iterator[FiniteMeetSemilattice]:
    """All labeled meet-semilattices on n elements named "0".."n-1".

    The zero is always element "0".  With up_to_iso only tables equal to
    their canonical form are emitted.
    """
    if n < 1:
        raise ValidationError("semilattice size must be at least 1")
    names = tuple(str(i) for i in range(n))
    for table in _meet_tables(n):
        if up_to_iso and canonical_meet_table(table) != table:
            continue
        rows = [[names[v] for v in row] for row in table]
        yield FiniteMeetSemilattice(names, "0", rows)


def powerset_algebra(atoms: int) -> FiniteGenBoolAlg:
    """The algebra of subsets of {1..atoms} under intersection and union.

    Elements are named by their sorted digit strings ("12" for {1, 2}),
    with "0" for the empty set; they are declared by size then
    lexicographically, so the top is the full string.
    """
    if atoms < 0:
        raise ValidationError("atom count must be nonnegative")
    subsets = []
    for r in range(atoms + 1):
        subsets.extend(combinations(range(1, atoms + 1), r))
    names = {s: "".join(str(d) for d in s) if s else "0" for s in subsets}
    elements = [names[s] for s in subsets]
    meet = [[names[tuple(d for d in a if d in b)] for b in subsets]
            for a in subsets]
    join = [[names[tuple(sorted(set(a) | set(b)))] for b in subsets]
            for a in subsets]
    return FiniteGenBoolAlg(elements, "0", meet, join)


def enumerate_representations(semilattice: FiniteMeetSemilattice,
                              algebra) -> Iterator[Representation]:
    """All representations of the semilattice in the algebra (or view).

    Candidate maps are scanned lexicographically over the codomain's
    declared order, zero pinned to zero, and filtered by meet
    preservation.
    """
    E, B = semilattice, algebra
    nonzero = tuple(x for x in E.elements if x != E.zero)
    for images in product(B.elements, repeat=len(nonzero)):
        mapping = dict(zip(nonzero, images))
        mapping[E.zero] = B.zero
        if all(mapping[E.meet(x, y)] == B.meet(mapping[x], mapping[y])
               for x in nonzero for y in nonzero):
            yield Representation(E, B, mapping)


def _universe(spec: UniverseSpec):
    algebras = {k: powerset_algebra(k) for k in spec.atom_counts}
    for n in range(1, spec.max_semilattice_size + 1):
        for E in enumerate_semilattices(n, spec.up_to_iso):
            for k in spec.atom_counts:
                yield E, k, algebras[k]


def search_gap(spec: UniverseSpec) -> Iterator[GapExample]:
    """Stream the cover-to-join-but-not-tight representations in the universe.

    Tightness is taken against the full codomain.  Representations whose
    range is just the zero are skipped: they are cover-to-join and fail
    tightness against any nontrivial view for no reason beyond collapsing
    everything, so they would bury the structurally interesting examples.
    """
    for E, _, B in _universe(spec):
        for rep in enumerate_representations(E, B):
            if rep.is_zero_range():
                continue
            ctj = is_cover_to_join(rep)
            if not ctj.ok:
                continue
            tight = is_tight(rep)
            if tight.ok:
                continue
            report = TightnessReport(cover_to_join=ctj, tight=tight,
                                     nondegenerate=is_nondegenerate(rep))
            yield GapExample(E, B, rep, report)


@dataclass
class VerificationSummary:
    """Counts and violations from an exhaustive theorem run."""
    semilattices: int = 0
    algebras: int = 0
    representations: int = 0
    checks: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_representation(rep, summary):
    """Run every representation-level invariant on one example."""
    E, B = rep.domain, rep.codomain
    label = "map " + " ".join(f"{x}->{rep.image(x)}" for x in E.elements)

    def record(cond, text):
        summary.checks += 1
        if not cond:
            summary.violations.append(f"{label}: {text}")

    ctj = is_cover_to_join(rep)
    tight = is_tight(rep)
    record(ctj.ok == is_cover_to_join(rep, minimal_only=False).ok,
           "cover-to-join verdict differs over all covers")
    record(tight.ok == is_tight(rep, minimal_only=False).ok,
           "tight verdict differs over all covers")
    record(tight.ok == is_tight(rep, reduced=False, minimal_only=False).ok,
           "tight verdict differs under the unreduced scan")
    record((not tight.ok) or ctj.ok, "tight but not cover-to-join")

    nd = is_nondegenerate(rep)
    if nd.ok:
        record(tight.ok == ctj.ok,
               "non-degenerate but tight and cover-to-join disagree")

    if ctj.ok:
        t = tighten(rep)
        record(is_ideal(B.base, t.codomain.members).ok,
               "tightening corner is not an ideal")
        record(all(rep.image(x) in t.codomain for x in E.elements),
               "tightening corner misses part of the range")
        record(is_tight(rep, t.codomain).ok,
               "not tight in the tightening corner")
        full_join = B.join_all(
            rep.image(x) for x in E.elements if x != E.zero)
        record(all(
            B.join_all(rep.image(z) for z in zs) == full_join
            for zs in covers_of(E, E.elements)),
            "tightening unit depends on the cover choice")
        # every instance with a nonempty above-set already holds
        for x in E.elements:
            for ys in antichains(E):
                family = constrained_interval(E, (x,), ys)
                rhs = B.meet_all(
                    [rep.image(x)] + [B.complement(rep.image(y)) for y in ys])
                for zs in covers_of(E, family):
                    record(B.join_all(rep.image(z) for z in zs) == rhs,
                           f"cover-to-join but instance above {x} fails")

    # the prescribed value always dominates the members and their joins
    for above in [()] + [(x,) for x in E.elements]:
        for ys in antichains(E):
            family = constrained_interval(E, above, ys)
            rhs = B.meet_all(
                [rep.image(x) for x in above]
                + [B.complement(rep.image(y)) for y in ys])
            record(all(B.leq(rep.image(z), rhs) for z in family),
                   "member image escapes the prescribed value")


def _check_semilattice(E, summary):
    """Constrained-set reduction laws, exhaustively over subset pairs."""
    subsets = list(_graded_subsets(E.elements))
    for above in subsets:
        for disjoint in subsets:
            summary.checks += 1
            full = constrained_interval(E, above, disjoint)
            reduced_above = (E.meet_all(above),) if above else ()
            maximal = tuple(
                y for y in disjoint
                if not any(y != w and E.leq(y, w) for w in disjoint))
            if constrained_interval(E, reduced_above, maximal) != full:
                summary.violations.append(
                    f"constrained-set reduction unsound at {above}, {disjoint}")


def verify_theorems(spec: UniverseSpec) -> VerificationSummary:
    """Exhaustively verify the representation-level theorems over a universe.

    Covers: the tight-implies-cover-to-join direction, tightness in the
    tightening corner, the equivalence for non-degenerate
    representations, the automatic instances with nonempty above-set for
    cover-to-join representations, oracle agreement between the reduced
    and brute-force scans, and independence of the tightening unit from
    the cover choice.  Violations are collected, never raised.
    """
    summary = VerificationSummary()
    algebras = {k: powerset_algebra(k) for k in spec.atom_counts}
    for n in range(1, spec.max_semilattice_size + 1):
        for E in enumerate_semilattices(n, spec.up_to_iso):
            summary.semilattices += 1
            _check_semilattice(E, summary)
            for k in spec.atom_counts:
                for rep in enumerate_representations(E, algebras[k]):
                    summary.representations += 1
                    _check_representation(rep, summary)
    summary.algebras = len(spec.atom_counts)
    return summary
