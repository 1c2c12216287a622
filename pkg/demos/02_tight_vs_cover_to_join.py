"""
Tight versus cover-to-join, and the codomain repairs
====================================================

A representation maps a semilattice into a generalized Boolean algebra,
preserving zero and meets.  Cover-to-join asks that covers of a lower
set join to the image of its top; tight asks the same for every
constrained set, with the prescribed value built from meets and
complements.  Tight is strictly stronger, and the gap is a property of
the codomain: shrink the codomain to the right ideal and it closes.
"""

from tightrep import (
    FiniteMeetSemilattice,
    Representation,
    is_cover_to_join,
    is_nondegenerate,
    is_tight,
    powerset_algebra,
    principal_ideal,
    restrict_to_generated_ideal,
    tighten,
)

# The minimal example: the two-element chain into P(2), sending the top
# to a single atom.  Covers of the chain must contain "1", and their
# images join to exactly pi(1), so cover-to-join holds...
chain2 = FiniteMeetSemilattice(["0", "1"], "0", [["0", "0"], ["0", "1"]])
p2 = powerset_algebra(2)
pi = Representation(chain2, p2, {"0": "0", "1": "1"})
print("cover-to-join:", is_cover_to_join(pi).label)

# ...but tightness fails: with no constraints at all, the constrained
# set is the whole chain, {1} covers it, and the prescribed value is the
# empty meet, i.e. the unit of the codomain.  The witness says exactly
# that: join over Z = {1} gives 1, but the equation demands the top 12.
verdict = is_tight(pi)
w = verdict.witness
print("tight:", verdict.label,
      f" witness: X={w.above} Y={w.disjoint} Z={w.cover}  {w.lhs} != {w.rhs}")

# The failure is the codomain's fault: the atom 2 is unreachable from
# the range, as the non-degeneracy check reports.
print("non-degenerate:", is_nondegenerate(pi).label,
      " unreachable element:", is_nondegenerate(pi).witness)

# Repair one: view the same map into the ideal generated by its range.
viewed = restrict_to_generated_ideal(pi)
print("\ninto the generated ideal", viewed.codomain.elements,
      "-> tight:", is_tight(viewed).label)

# Repair two: the tightening corner.  The unit is the join of the images
# of all nonzero elements, and the corner is everything below it.
corner = tighten(pi)
print("tightening unit:", corner.unit,
      " corner:", corner.codomain.elements,
      " tight:", is_tight(corner.representation).label)

# Both repairs agree with checking against the principal ideal directly.
print("tight below the atom:", is_tight(pi, principal_ideal(p2, "1")).label)

# Against a richer example the verdicts can disagree the other way.
# The diamond with both atoms and a strictly fatter top is not even
# cover-to-join: the cover {a, b} of the whole diamond joins to 12,
# missing the top's image 123.
diamond = FiniteMeetSemilattice(
    ["0", "a", "b", "1"], "0",
    [["0", "0", "0", "0"],
     ["0", "a", "0", "a"],
     ["0", "0", "b", "b"],
     ["0", "a", "b", "1"]])
p3 = powerset_algebra(3)
rho = Representation(diamond, p3, {"0": "0", "a": "1", "b": "2", "1": "123"})
bad = is_cover_to_join(rho)
print("\nfat-top diamond cover-to-join:", bad.label,
      " witness: x =", bad.witness.element, " Z =", bad.witness.cover)

# Splitting the atoms evenly, on the other hand, is tight outright.
vee = FiniteMeetSemilattice(
    ["0", "a", "b"], "0",
    [["0", "0", "0"], ["0", "a", "0"], ["0", "0", "b"]])
split = Representation(vee, p2, {"0": "0", "a": "1", "b": "2"})
print("atom-splitting vee tight:", is_tight(split).label)
