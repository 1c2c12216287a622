"""
Finite semilattices, generalized Boolean algebras, and ideals
=============================================================

Structures are plain operation tables over named elements; constructing
one runs the exhaustive axiom check, so everything you can hold in your
hand is already validated.
"""

from tightrep import (
    FiniteGenBoolAlg,
    FiniteMeetSemilattice,
    ValidationError,
    ideal_generated_by,
    is_ideal,
    powerset_algebra,
    principal_ideal,
)

# A meet-semilattice is (elements, zero, meet table).  Here is the
# "diamond": two incomparable atoms a, b below a common top.
diamond = FiniteMeetSemilattice(
    ["0", "a", "b", "1"], "0",
    [["0", "0", "0", "0"],
     ["0", "a", "0", "a"],
     ["0", "0", "b", "b"],
     ["0", "a", "b", "1"]])
print("diamond order: a <= 1?", diamond.leq("a", "1"),
      "  a <= b?", diamond.leq("a", "b"))

# Validation is eager.  Swap two entries and the constructor names the
# first broken axiom together with the offending pair.
try:
    FiniteMeetSemilattice(
        ["0", "a", "b"], "0",
        [["0", "0", "0"], ["0", "a", "a"], ["0", "b", "b"]])
except ValidationError as err:
    print("rejected:", err)

# The workhorse codomains are powerset algebras: all subsets of {1..k},
# named by their digit strings, meet = intersection, join = union.
p3 = powerset_algebra(3)
print("\nP(3) elements:", " ".join(p3.elements))
print("top:", p3.top)

# Relative complements are what make these algebras Boolean: for a <= b
# there is exactly one x with x v a = b and x ^ a = 0.
print("123 \\ 12 =", p3.relative_complement("12", "123"))
print("complement of 2 (relative to the top):", p3.complement("2"))

# An ideal is a nonempty, downward-closed, join-closed subset.  The test
# produces a witness when it fails.
check = is_ideal(p3, ["0", "1", "2"])
print("\n{0,1,2} an ideal?", check.ok, "-", check.reason, check.witness)

# The ideal generated by a set is everything below the join of the set;
# a principal ideal is the special case of a single generator.
generated = ideal_generated_by(p3, ["1", "2"])
print("ideal generated by {1, 2}:", " ".join(generated.elements))
below_12 = principal_ideal(p3, "12")
print("principal ideal below 12:", " ".join(below_12.elements))

# An ideal view is itself a generalized Boolean algebra whose top is the
# join of its members, and complements inside the view are taken against
# that smaller top.  This is the mechanism the tightening construction
# uses to reinterpret a codomain.
print("view top:", below_12.top)
print("complement of 1 inside the view:", below_12.complement("1"),
      " (in the full algebra it is", p3.complement("1") + ")")

# Chains longer than two fail the complement axiom, so they are
# semilattices but not generalized Boolean algebras.
try:
    FiniteGenBoolAlg(
        ["0", "m", "1"], "0",
        [["0", "0", "0"], ["0", "m", "m"], ["0", "m", "1"]],
        [["0", "m", "1"], ["m", "m", "1"], ["1", "1", "1"]])
except ValidationError as err:
    print("\nthree-chain rejected:", err)
