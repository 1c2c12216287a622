"""Representations of semilattices in generalized Boolean algebras.

A representation is a zero- and meet-preserving map.  This module decides
the cover-to-join and tight properties, decides non-degeneracy, produces
minimal witnesses for every failure, and builds the two codomain
adjustments that repair a representation: the ideal generated by its
range, and the tightening corner below the join of its range.

Conventions used throughout (they make the empty cases well defined):
the empty join is the zero of the codomain view, and the empty meet is
the view's top.  All subset scans run in graded-lexicographic order over
the declared element order, so witnesses are deterministic and minimal
in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .lattices import (
    FiniteMeetSemilattice,
    IdealView,
    ValidationError,
    ideal_generated_by,
    principal_ideal,
)


class NotCoverToJoinError(ValidationError):
    """An operation needing the cover-to-join hypothesis got a rep without it."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(
            f"representation is not cover-to-join: join of "
            f"{{{', '.join(witness.cover)}}} differs from the image of "
            f"{witness.element}")


@dataclass(frozen=True)
class CoverToJoinWitness:
    """A cover of everything below `element` whose image join misses the mark."""
    element: str
    cover: tuple[str, ...]


@dataclass(frozen=True)
class TightWitness:
    """A constrained-set instance violating the tight equation.

    `above` and `disjoint` carve out the constrained set (everything
    below all of `above` and meet-zero against all of `disjoint`);
    `cover` is the violating cover, whose image join `lhs` differs from
    the prescribed value `rhs`.
    """
    above: tuple[str, ...]
    disjoint: tuple[str, ...]
    cover: tuple[str, ...]
    lhs: str
    rhs: str


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: object | None = None

    @property
    def label(self) -> str:
        return "pass" if self.ok else "fail"


@dataclass(frozen=True)
class TightnessReport:
    cover_to_join: Verdict
    tight: Verdict
    nondegenerate: Verdict


@dataclass(frozen=True)
class Tightening:
    """The corner that makes a cover-to-join representation tight.

    `unit` is the join of the images of all nonzero domain elements,
    `codomain` the ideal of everything below it, and `representation`
    the same map read into that view.
    """
    unit: str
    codomain: IdealView
    representation: "Representation"


class Representation:
    """A validated map from a finite meet-semilattice into an algebra view.

    Checks totality, that every value lies in the codomain view, that zero
    maps to zero, and that meets are preserved pairwise.
    """

    def __init__(self, domain: FiniteMeetSemilattice, codomain,
                 mapping: Mapping[str, str]):
        self.domain = domain
        self.codomain = codomain
        for x in mapping:
            domain.index(x)
        missing = [x for x in domain.elements if x not in mapping]
        if missing:
            raise ValidationError(f"map is not total: no image for '{missing[0]}'")
        for x in domain.elements:
            if mapping[x] not in codomain:
                codomain.base.index(mapping[x])
                raise ValidationError(
                    f"image of '{x}' lies outside the codomain view")
        if mapping[domain.zero] != codomain.zero:
            raise ValidationError("zero not preserved")
        for x in domain.elements:
            for y in domain.elements:
                if mapping[domain.meet(x, y)] != codomain.meet(mapping[x], mapping[y]):
                    raise ValidationError(f"meet not preserved at ({x}, {y})")
        self.mapping = dict(mapping)

    def __repr__(self):
        pairs = ", ".join(f"{x}->{self.mapping[x]}" for x in self.domain.elements)
        return f"Representation({pairs})"

    def image(self, x: str) -> str:
        try:
            return self.mapping[x]
        except KeyError:
            raise ValidationError(f"unknown element '{x}'") from None

    def range_elements(self) -> tuple[str, ...]:
        return self.codomain.base.sort(self.mapping.values())

    def is_zero_range(self) -> bool:
        return set(self.mapping.values()) == {self.codomain.zero}

    def with_codomain(self, view) -> "Representation":
        return Representation(self.domain, view, self.mapping)


def _graded_subsets(items: tuple[str, ...]) -> Iterator[tuple[str, ...]]:
    """All subsets, by size then lexicographically in the given order."""
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def constrained_interval(semilattice: FiniteMeetSemilattice,
                         above: Iterable[str],
                         disjoint: Iterable[str]) -> tuple[str, ...]:
    """Elements below everything in `above` and meet-zero with everything
    in `disjoint`, in declared order."""
    E = semilattice
    above = [E.elements[E.index(x)] for x in above]
    disjoint = [E.elements[E.index(y)] for y in disjoint]
    return tuple(
        z for z in E.elements
        if all(E.leq(z, x) for x in above)
        and all(E.meet(z, y) == E.zero for y in disjoint))


def is_cover(semilattice: FiniteMeetSemilattice,
             cover: Iterable[str], family: Iterable[str]) -> Verdict:
    """Does every nonzero member of `family` meet some member of `cover`?

    Fails with the first uncovered element as witness.  `cover` must be
    contained in `family`.
    """
    E = semilattice
    family_set = set(family)
    for x in family_set:
        E.index(x)
    cover = E.sort(cover)
    for z in cover:
        if z not in family_set:
            raise ValidationError(f"cover element '{z}' is not in the family")
    for x in E.elements:
        if x not in family_set or x == E.zero:
            continue
        if all(E.meet(x, z) == E.zero for z in cover):
            return Verdict(False, x)
    return Verdict(True)


def _covers(semilattice, family, minimal_only=True):
    """Covers of `family` drawn from its nonzero part, graded-lex ordered.

    With minimal_only, only inclusion-minimal covers are produced; every
    finite cover contains one of these, and joins are monotone, so they
    are the binding instances for the tight and cover-to-join checks.
    """
    E = semilattice
    nonzero = tuple(x for x in E.sort(family) if x != E.zero)

    def covered(zs):
        return all(
            any(E.meet(x, z) != E.zero for z in zs) for x in nonzero)

    for zs in _graded_subsets(nonzero):
        if not covered(zs):
            continue
        if minimal_only and any(
                covered(zs[:i] + zs[i + 1:]) for i in range(len(zs))):
            continue
        yield zs


def covers_of(semilattice: FiniteMeetSemilattice,
              family: Iterable[str]) -> Iterator[tuple[str, ...]]:
    """The inclusion-minimal covers of `family`, deterministically ordered."""
    return _covers(semilattice, family, minimal_only=True)


def antichains(semilattice: FiniteMeetSemilattice) -> Iterator[tuple[str, ...]]:
    """Subsets with pairwise incomparable elements, graded-lex ordered."""
    E = semilattice
    for ys in _graded_subsets(E.elements):
        if all(not E.leq(a, b) and not E.leq(b, a)
               for a, b in combinations(ys, 2)):
            yield ys


def is_cover_to_join(rep: Representation, *, minimal_only: bool = True) -> Verdict:
    """Check that covers of everything below x always join to the image of x.

    Scans every domain element and, for each, the minimal covers of its
    lower set (all covers with minimal_only=False, for cross-checking).
    """
    E, view = rep.domain, rep.codomain
    for x in E.elements:
        family = constrained_interval(E, (x,), ())
        target = rep.image(x)
        for zs in _covers(E, family, minimal_only):
            lhs = view.join_all(rep.image(z) for z in zs)
            if lhs != target:
                return Verdict(False, CoverToJoinWitness(x, zs))
    return Verdict(True)


def is_tight(rep: Representation, view=None, *,
             minimal_only: bool = True, reduced: bool = True) -> Verdict:
    """Check the tight equation against a unital codomain view.

    The view defaults to the representation's own codomain; its derived
    top plays the role of the unit in complements.  With `reduced`, the
    scan shrinks provably without changing the verdict: the above-set
    collapses to a single element (meets are preserved, so constraining
    below a set is constraining below its meet, and the prescribed value
    only sees the meet of the images), the disjointness set ranges over
    antichains only (constraints and complements below a non-maximal
    element are absorbed by a maximal one), and instances are
    deduplicated by constrained set *and* prescribed value, since two
    instances agreeing on both are the same check.  With reduced=False
    both sets range over all subsets with no deduplication, which is the
    oracle form of the scan.
    """
    if view is None:
        view = rep.codomain
    E = rep.domain
    for x in E.elements:
        if rep.image(x) not in view:
            raise ValidationError(
                f"representation range not contained in the view "
                f"(image of '{x}')")

    if reduced:
        above_choices = [()] + [(x,) for x in E.elements]
        disjoint_choices = list(antichains(E))
    else:
        above_choices = list(_graded_subsets(E.elements))
        disjoint_choices = above_choices

    seen = set()
    for above in above_choices:
        for disjoint in disjoint_choices:
            family = constrained_interval(E, above, disjoint)
            terms = [rep.image(x) for x in above]
            terms += [view.complement(rep.image(y)) for y in disjoint]
            rhs = view.meet_all(terms)
            if reduced:
                key = (family, rhs)
                if key in seen:
                    continue
                seen.add(key)
            for zs in _covers(E, family, minimal_only):
                lhs = view.join_all(rep.image(z) for z in zs)
                if lhs != rhs:
                    return Verdict(
                        False, TightWitness(above, disjoint, zs, lhs, rhs))
    return Verdict(True)


def is_nondegenerate(rep: Representation) -> Verdict:
    """Does the range generate the whole codomain view as an ideal?

    Fails with the first view element not below the join of the range.
    """
    view = rep.codomain
    bound = view.join_all(rep.image(x) for x in rep.domain.elements)
    for a in view.elements:
        if not view.leq(a, bound):
            return Verdict(False, a)
    return Verdict(True)


def tightness_report(rep: Representation) -> TightnessReport:
    """All three verdicts against the representation's own codomain view."""
    return TightnessReport(
        cover_to_join=is_cover_to_join(rep),
        tight=is_tight(rep),
        nondegenerate=is_nondegenerate(rep))


def tighten(rep: Representation) -> Tightening:
    """Shrink the codomain to the corner below the join of the range.

    Requires the representation to be cover-to-join.  The canonical cover
    is all nonzero domain elements; for a cover-to-join representation
    the join of the images of any cover equals the join over this
    canonical one, so the construction does not depend on the choice.
    The resulting view contains the range, and the representation read
    into it is tight.
    """
    verdict = is_cover_to_join(rep)
    if not verdict.ok:
        raise NotCoverToJoinError(verdict.witness)
    E, view = rep.domain, rep.codomain
    unit = view.join_all(
        rep.image(z) for z in E.elements if z != E.zero)
    corner = principal_ideal(view.base, unit)
    return Tightening(unit=unit, codomain=corner,
                      representation=rep.with_codomain(corner))


def restrict_to_generated_ideal(rep: Representation) -> Representation:
    """The same map into the ideal generated by its range.

    The result is always non-degenerate.
    """
    ideal = ideal_generated_by(rep.codomain, rep.range_elements())
    return rep.with_codomain(ideal)
