"""
Frameworks and their extensions
===============================

Build a small framework by hand, look at its grounded labelling, and list
the extensions under each of the four semantics.
"""

from dungsolve import Semantics, build_framework, enumerate_extensions, grounded_labelling

# a and b attack each other, both attack c, and c attacks d
af = build_framework(
    ["a", "b", "c", "d"],
    [("a", "b"), ("b", "a"), ("a", "c"), ("b", "c"), ("c", "d")],
)
print(af)

# The grounded labelling decides nothing here: the a/b conflict leaves
# everything undecided.
for name, label in zip(af.names, grounded_labelling(af)):
    print(f"  {name}: {label.name}")

# Each semantics picks a different family of sets.
for sem in Semantics:
    exts = enumerate_extensions(af, sem)
    print(f"{sem.value}: {[af.names_of(e) for e in exts]}")

# Breaking the symmetry with an unattacked argument that defeats b settles
# everything, and all four semantics agree.
af2 = build_framework(
    ["a", "b", "c", "d", "e"],
    [("a", "b"), ("b", "a"), ("a", "c"), ("b", "c"), ("c", "d"), ("e", "b")],
)
for sem in Semantics:
    print(f"{sem.value}: {[af2.names_of(e) for e in enumerate_extensions(af2, sem)]}")
