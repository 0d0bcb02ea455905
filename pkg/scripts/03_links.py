"""
Links from gluing words, and their invariance under the handlebody group.

Run with ``python scripts/03_links.py``.
"""

import random

from mcgx import MappingClass, Signature, generating_set, named
from mcgx.linktool import abelianization, link_invariants, link_presentation

sphere = Signature(0, 2)

# Gluing two trivial 2-tangles by the identity gives the 2-component unlink.
print("identity:", link_invariants(named(sphere, "")))

# Powers of the middle half twist give the unknot, then the Hopf link, then the trefoil.
for k in (1, 2, 3):
    inv = link_invariants(named(sphere, f"sigma_2^{k}"))
    print(f"sigma_2^{k}:", inv["components"], "component(s), H1 =", inv["abelianization"])
    print("   first elementary ideal:", inv["first_elementary_ideal"])

# The presentation itself, in the exchange format.
print(link_presentation(named(sphere, "sigma_2^3")).export())

# Composing on the right with members of the handlebody group never changes the link.
rng = random.Random(0)
phi = named(sphere, "sigma_2^3")
ref = link_invariants(phi)
pool = generating_set(sphere, pure=False)
for _ in range(5):
    eps = MappingClass(sphere, tuple((rng.choice(pool), rng.choice((1, -1))) for _ in range(3)))
    same = link_invariants(phi @ eps) == ref
    print(f"phi . ({eps}) -> same invariants: {same}")

# The closed manifold of any handlebody-group gluing at genus g has H1 = Z^g.
for g in range(4):
    sig = Signature(g, 1)
    print(f"genus {g}: ambient H1 =", abelianization(link_presentation(named(sig, "")).ambient()))
