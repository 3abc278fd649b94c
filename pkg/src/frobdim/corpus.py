"""Test-corpus generation: standard and seeded-random modules.

A corpus directory holds instance files (see iofmt) pairing a ring with
a module and a criteria block.  The generator is deterministic in the
seed so a regenerated corpus is byte identical.
"""

from __future__ import annotations

import itertools
import random

from .groebner import syzygy_basis
from .polynomials import FreeVector, Monomial, Polynomial
from .resolutions import PresentedModule
from .rings import QuotientRing

DEFAULT_SEED = 20240917


def homogeneous_monomials(ring: QuotientRing, degree: int) -> list[Monomial]:
    n = len(ring.variables)
    out = []
    for split in itertools.combinations(range(degree + n - 1), n - 1):
        exps = []
        prev = -1
        for cut in split:
            exps.append(cut - prev - 1)
            prev = cut
        exps.append(degree + n - 2 - prev)
        out.append(Monomial(tuple(exps)))
    return out


def random_homogeneous_poly(ring: QuotientRing, degree: int,
                            rng: random.Random) -> Polynomial:
    """A random homogeneous element of the given degree, possibly zero."""
    base = ring.base_ring
    monomials = homogeneous_monomials(ring, degree)
    terms = []
    for m in monomials:
        c = rng.randrange(base.p)
        if c:
            terms.append((m, c))
    return base.from_terms(terms)


def linear_nonzerodivisor(ring: QuotientRing) -> Polynomial | None:
    """A degree-one nonzerodivisor on the quotient, or None.

    A linear form is a nonzerodivisor exactly when its annihilator
    syzygies all lie in the ideal, so each candidate costs one syzygy
    computation.  Candidates are scanned in a fixed order for
    determinism.
    """
    base = ring.base_ring
    n = len(ring.variables)
    for coeffs in itertools.product(range(base.p), repeat=n):
        if not any(coeffs):
            continue
        ell = base.from_terms(
            [(Monomial(tuple(1 if j == v else 0 for j in range(n))), c)
             for v, c in enumerate(coeffs) if c])
        syz = syzygy_basis([FreeVector.from_entries(base, 1, [(0, ell)])],
                           1, ring, budget_steps=ring.budget_steps)
        if all(ring.reduce(vec.entry(0)).is_zero() for vec in syz):
            return ell
    return None


def standard_modules(ring: QuotientRing) -> list[tuple[str, PresentedModule]]:
    """Named reference modules: the residue field, the ring, and a
    hypersurface quotient by a linear nonzerodivisor when one exists."""
    out = [
        ("residue-field", PresentedModule.residue_field(ring)),
        ("free-rank-one", PresentedModule.free(ring, 1)),
    ]
    ell = linear_nonzerodivisor(ring)
    if ell is not None:
        out.append(("linear-hypersurface", PresentedModule.cyclic(ring, [ell])))
    return out


def random_module(ring: QuotientRing, rng: random.Random,
                  max_generators: int = 2, max_relations: int = 3,
                  max_degree: int = 2) -> PresentedModule:
    """A random graded module presentation, guaranteed nonzero."""
    base = ring.base_ring
    while True:
        g = rng.randint(1, max_generators)
        gen_degrees = sorted(rng.randint(0, 1) for _ in range(g))
        relations = []
        for _ in range(rng.randint(0, max_relations)):
            target = max(gen_degrees) + rng.randint(1, max_degree)
            entries = []
            for pos in range(g):
                poly = random_homogeneous_poly(
                    ring, target - gen_degrees[pos], rng)
                if not poly.is_zero():
                    entries.append((pos, poly))
            if entries:
                relations.append(FreeVector.from_entries(base, g, entries))
        module = PresentedModule(ring, g, tuple(gen_degrees), tuple(relations))
        if not module.is_zero():
            return module


def module_to_dict(module: PresentedModule) -> dict:
    relations = []
    for vec in module.relations:
        entries = dict(vec.entries())
        relations.append([str(entries.get(pos, module.ring.base_ring.zero()))
                          for pos in range(module.gens)])
    return {
        "generators": module.gens,
        "degrees": list(module.gen_degrees),
        "relations": relations,
    }


def ring_to_dict(ring: QuotientRing) -> dict:
    return {
        "p": ring.p,
        "vars": list(ring.variables),
        "ideal": [str(f) for f in ring.ideal],
    }


CORPUS_RINGS: tuple[tuple[str, dict], ...] = (
    ("polynomial-f2", {"p": 2, "vars": ["x", "y"], "ideal": []}),
    ("node-f2", {"p": 2, "vars": ["x", "y"], "ideal": ["x*y"]}),
    ("cusp-line-f3", {"p": 3, "vars": ["x", "y"], "ideal": ["x^2"]}),
    ("triple-line-f2", {"p": 2, "vars": ["x", "y"], "ideal": ["x^3"]}),
    ("dual-numbers-f2", {"p": 2, "vars": ["x"], "ideal": ["x^2"]}),
    ("fat-point-f2", {"p": 2, "vars": ["x", "y"],
                      "ideal": ["x^2", "x*y", "y^2"]}),
)


def _criteria_for(ring: QuotientRing, name: str) -> dict:
    inv = ring.invariants
    e_hi = max(1, inv.e_threshold)
    if name == "fat-point-f2":
        return {"e": [e_hi], "t": 1, "window": None, "mode": "zero_dim"}
    return {"e": sorted({1, e_hi}), "t": 1, "window": None, "mode": "auto"}


def corpus_instances(seed: int = DEFAULT_SEED,
                     random_per_ring: int = 2) -> list[tuple[str, str]]:
    """Deterministic (filename, file text) pairs for the bundled corpus."""
    from .iofmt import render_instance_text

    out = []
    for ring_name, ring_dict in CORPUS_RINGS:
        ring = QuotientRing(ring_dict["p"], tuple(ring_dict["vars"]),
                            tuple(ring_dict["ideal"]))
        criteria = _criteria_for(ring, ring_name)
        entries = standard_modules(ring)
        rng = random.Random(f"{seed}:{ring_name}")
        for k in range(random_per_ring):
            entries.append((f"random-{k}", random_module(ring, rng)))
        for module_name, module in entries:
            if criteria["mode"] == "zero_dim" and module.is_zero():
                continue
            text = render_instance_text(ring_to_dict(ring),
                                        module_to_dict(module), criteria)
            out.append((f"{ring_name}--{module_name}.txt", text))
    return sorted(out)


def write_corpus(directory, seed: int = DEFAULT_SEED,
                 random_per_ring: int = 2) -> list[str]:
    import pathlib

    path = pathlib.Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    names = []
    for name, text in corpus_instances(seed, random_per_ring):
        (path / name).write_text(text, encoding="utf-8")
        names.append(name)
    return names
