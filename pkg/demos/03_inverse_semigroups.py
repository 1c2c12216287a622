"""
Inverse semigroups and tight homomorphisms
==========================================

For inverse semigroups everything reduces to idempotents: a homomorphism
is tight (or cover-to-join) when its restriction to the idempotent
semilattice is, as a representation into the codomain's idempotent
algebra.  The corner construction carries over: keep the codomain
elements whose source and range projections sit below the unit.
"""

from tightrep import (
    FiniteInverseSemigroup,
    ISHomomorphism,
    check_homomorphism_tightness,
    is_generalized_boolean_inverse_semigroup,
    tighten_homomorphism,
)

# The symmetric inverse semigroup on two points: all partial injections
# of {1, 2}.  Build its table by composing the maps directly.
maps = {"z": {}, "e1": {1: 1}, "e2": {2: 2},
        "a": {1: 2}, "b": {2: 1},
        "i": {1: 1, 2: 2}, "t": {1: 2, 2: 1}}
names = list(maps)


def compose(f, g):
    return {x: f[g[x]] for x in g if g[x] in f}


def name_of(m):
    return next(k for k, v in maps.items() if v == m)


i2 = FiniteInverseSemigroup(
    names, "z",
    [[name_of(compose(maps[x], maps[y])) for y in names] for x in names])
print("I2 has", len(i2), "elements; t* =", i2.inv("t"), ", a* =", i2.inv("a"))
print("idempotents:", " ".join(i2.idempotent_elements))

# The idempotents are the partial identities, ordered by domain
# inclusion, so they carry the powerset algebra on two atoms.  The check
# finds the joins (least upper bounds) and validates the result.
check = is_generalized_boolean_inverse_semigroup(i2)
print("idempotent algebra:", check.ok,
      " join(e1, e2) =", check.algebra.join("e1", "e2"))

# Transport the two-chain counterexample: send the chain's top to a
# rank-one idempotent.  The restriction to idempotents is exactly the
# semilattice counterexample, so cover-to-join passes and tight fails.
chain2 = FiniteInverseSemigroup(
    ["0", "1"], "0", [["0", "0"], ["0", "1"]])
phi = ISHomomorphism(chain2, i2, {"0": "z", "1": "e1"})
report = check_homomorphism_tightness(phi)
print("\ntransported counterexample:",
      "cover_to_join", report.cover_to_join.label + ",",
      "tight", report.tight.label)

# The corner below the unit e1 keeps exactly the elements t with
# t*t <= e1 and tt* <= e1: the zero and e1 itself.  Into that corner the
# homomorphism is tight.
result = tighten_homomorphism(phi)
print("corner elements:", " ".join(result.corner.elements),
      " unit:", result.unit,
      " tight:", result.report.tight.label)

# Not every codomain supports the notions: the five-element Brandt
# semigroup has incomparable idempotents with no join at all.
b2_names = ["z", "e1", "e2", "a", "b"]
b2 = FiniteInverseSemigroup(
    b2_names, "z",
    [[name_of(compose(maps[x], maps[y])) for y in b2_names] for x in b2_names])
verdict = is_generalized_boolean_inverse_semigroup(b2)
print("\nBrandt semigroup Boolean?", verdict.ok,
      " witness pair:", verdict.witness)
