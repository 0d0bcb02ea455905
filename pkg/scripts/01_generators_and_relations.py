"""
A tour of the generator tables.

Run with ``python scripts/01_generators_and_relations.py``.
"""

from mcgx import Signature, generating_set, named, relation_suite, table
from mcgx.generators import catalog

# A genus-1 surface with four punctures (two arcs). The fundamental group is free of rank 5.
sig = Signature(1, 2)
print("alphabet:", " ".join(sig.names))
print("loop around the last puncture:", sig.format(sig.u(4)))

# Named curves are words in that alphabet, together with their homology classes.
for name, word in catalog(sig).items():
    print(f"  {name:8s} {sig.format(word):30s} {sig.abelianize(word)}")

# Each generator is an automorphism of the free group. Words compose right to left, so
# "iota_1 tau_1" first twists along the meridian and then exchanges the first two punctures.
f = named(sig, "iota_1 tau_1").automorphism
print("\niota_1 tau_1:")
print(" ", f.format())
print("  puncture permutation:", f.induced_permutation())

# The four generating sets.
print("\nfull group:", " ".join(generating_set(sig, pure=False)))
print("pure group:", " ".join(generating_set(sig, pure=True)))

# Equality of mapping classes is equality up to one common inner automorphism.
t = table(sig)
lhs, rhs = t["s_1_1"], t["iota_1"] ** 2
print("\ns_1_1 == iota_1^2 up to conjugation by", repr(sig.format(lhs.outer_equal(rhs))))

# The relation catalog for this signature; every line should read PASS.
for res in relation_suite(sig):
    print(res.line())
