"""
Credulous and skeptical acceptance
==================================

Decision queries stop at the first witness or counterexample rather than
enumerating every extension. Here we compare both routes.
"""

from dungsolve import Semantics, decide_credulous, decide_skeptical, enumerate_extensions
from dungsolve.generate import GeneratorConfig, generate

af = generate(GeneratorConfig(8, 0.2, seed=11))
print(af, sorted((af.names[a], af.names[b]) for a, b in af.attacks))

print(f"{'arg':>4} " + " ".join(f"{s.value:>7}" for s in Semantics))
for x, name in enumerate(af.names):
    cells = []
    for sem in Semantics:
        cred = "Y" if decide_credulous(af, x, sem) else "n"
        skep = "Y" if decide_skeptical(af, x, sem) else "n"
        cells.append(f"{cred}/{skep}".rjust(7))
    print(f"{name:>4} " + " ".join(cells))

# Same answers from the full enumeration.
for sem in Semantics:
    exts = enumerate_extensions(af, sem)
    union = set().union(*[set(e) for e in exts]) if exts else set()
    inter = set(range(len(af))).intersection(*[set(e) for e in exts])
    assert all(decide_credulous(af, x, sem) == (x in union) for x in range(len(af)))
    assert all(decide_skeptical(af, x, sem) == (x in inter) for x in range(len(af)))
print("decisions agree with enumeration")

# With no stable extension, every argument is skeptically accepted under ST.
cycle = generate(GeneratorConfig(3, shape="k_cycle"))
print(enumerate_extensions(cycle, "ST"), decide_skeptical(cycle, "a", "ST"))
