"""Seifert invariants: twists, normal form, and the coefficient dictionary.

Rolfsen twists move the central framing and the fiber pairs around
without changing the orbifold Euler invariant e = n + sum beta/alpha.
normalize uses them to reach the unique normal form, and the dictionary
translates a normal-form tuple into the contact surgery coefficients of
its surgered presentation and back.
"""

from contactsurgery import (
    SeifertInvariants,
    coefficients_from_seifert,
    normalize,
    rolfsen_twist,
    seifert_from_coefficients,
)

inv = SeifertInvariants(1, 3, ((5, 2), (3, 1)))
print(f"start: g={inv.g} n={inv.n} pairs={inv.pairs}  e = {inv.e_invariant}")

twisted = rolfsen_twist(rolfsen_twist(inv, 0, 1), 1, -1)
print(f"after two twists: n={twisted.n} pairs={twisted.pairs}"
      f"  e = {twisted.e_invariant} (unchanged)")

restored = normalize(twisted)
print(f"normalized: n={restored.n} pairs={restored.pairs}"
      f"  normal form again: {restored == inv}\n")

rs = coefficients_from_seifert(inv)
print(f"surgery coefficients of {inv.pairs} over framing {inv.n}:"
      f" {[str(r) for r in rs]}")
back = seifert_from_coefficients(inv.g, rs)
print(f"inverted: g={back.g} n={back.n} pairs={back.pairs}"
      f"  round trip exact: {back == inv}")
