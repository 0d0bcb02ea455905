"""
Certificates and refutations for membership in the handlebody group.

Run with ``python scripts/02_membership.py``.
"""

from mcgx import Signature, coset_equivalent, membership, named

sig = Signature(1, 1)

# A product of generators is found again by the meet-in-the-middle search. The expression
# returned is re-evaluated and compared with the query before it is reported.
query = named(sig, "omega_1 xi_1_1^-1 tau_1")
print("query:", query, "->", membership(query, depth=6))

# The twist along the longitude moves the meridian off itself in homology, so it is refuted
# without any search.
print("twist:alpha_1 ->", membership(named(sig, "twist:alpha_1")))

# On the sphere, the half twist of the two middle punctures breaks the arc pairing.
sphere = Signature(0, 2)
print("sigma_2 ->", membership(named(sphere, "sigma_2")))

# Its square keeps the pairing and acts trivially on the (empty) meridian span, but it
# clasps the two arcs; the kernel test catches that.
print("sigma_2^2 ->", membership(named(sphere, "sigma_2^2")))

# Two gluing words give the same decomposition when they differ by a member on the right.
phi = named(sig, "twist:alpha_1 tau_1")
print("\ncoset test phi vs phi.iota_1 ->", coset_equivalent(phi, phi @ named(sig, "iota_1")))
print("coset test id vs twist:alpha_1 ->", coset_equivalent(named(sig, ""), named(sig, "twist:alpha_1")))
