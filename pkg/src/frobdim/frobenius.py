"""Frobenius functors: twisted complexes, pushforward presentations, Tor and Ext.

Two independent routes compute the same Tor values.  The twist route raises
every matrix entry of a free resolution to the q-th power and takes
homology.  The pushforward route presents the ring viewed through the e-th
Frobenius as a module over itself, on the q-restricted monomial generators,
and tensors a resolution with it.  Agreement of the two routes is a deep
consistency check exercised by the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ResourceLimitExceeded
from .polynomials import FreeVector, Monomial, q_basis_decompose
from .resolutions import (
    FreeComplex,
    PresentedModule,
    block_columns,
    ext_module,
    homology_at,
    hom_power_homology,
    minimal_free_resolution,
)
from .rings import QuotientRing

PUSHFORWARD_GENERATOR_CAP = 4096


def frobenius_twist(complex_: FreeComplex, e: int) -> FreeComplex:
    """Raise every differential entry to the q-th power, q = p^e.

    Homology of the twisted complex computes Tor against the ring viewed
    through the e-th Frobenius.  The grading of the source complex does not
    survive the twist, so the result is ungraded.
    """
    e = int(e)
    if e < 0:
        raise ValueError("Frobenius exponent must be non-negative")
    ring = complex_.ring
    q = ring.p ** e
    maps: dict[int, list[FreeVector]] = {}
    for i in range(complex_.lo + 1, complex_.hi + 1):
        cols = []
        for col in complex_.map_columns(i):
            entries = [(pos, poly.qpower(e, q)) for pos, poly in col.entries()]
            cols.append(ring.reduce_vector(
                FreeVector.from_entries(ring.base_ring, complex_.rank(i - 1), entries)))
        maps[i] = cols
    return FreeComplex(ring, complex_.lo, complex_.hi, dict(complex_.ranks), maps,
                       degrees=None, validate=True)


@dataclass
class FrobeniusPresentation:
    """The ring through the e-th Frobenius, presented as a module over itself.

    Generators are the q-restricted monomials (every exponent below q);
    relation columns come from decomposing f*b over the q-th power basis for
    each defining ideal generator f and each generator b.  Generator b sits
    in scaled degree deg(b) with monomial coefficients weighted by q, so the
    presentation is honestly graded.
    """

    ring: QuotientRing
    e: int
    q: int
    generators: tuple[Monomial, ...]
    module: PresentedModule


def pushforward_presentation(ring: QuotientRing, e: int,
                             budget_steps: int | None = None,
                             generator_cap: int = PUSHFORWARD_GENERATOR_CAP
                             ) -> FrobeniusPresentation:
    e = int(e)
    if e < 1:
        raise ValueError("Frobenius exponent must be at least 1")
    base = ring.base_ring
    q = ring.p ** e
    count = q ** base.n
    if count > generator_cap:
        raise ResourceLimitExceeded(
            f"pushforward needs {count} generators, above the cap of {generator_cap}")
    exps_list: list[tuple[int, ...]] = [()]
    for _ in range(base.n):
        exps_list = [t + (a,) for t in exps_list for a in range(q)]
    exps_list.sort(key=base.order.key)
    generators = tuple(Monomial(t) for t in exps_list)
    index = {m.exponents: i for i, m in enumerate(generators)}
    relations = []
    for f in ring.ideal_gens:
        for b in generators:
            product = f * base.term(b, 1)
            parts = [(index[slot.exponents], coeff_poly)
                     for slot, coeff_poly in q_basis_decompose(product, e).items()]
            relations.append(FreeVector.from_entries(base, count, parts))
    degrees = [m.total_degree for m in generators]
    module = PresentedModule(ring, count, degrees, relations, degree_scale=q)
    return FrobeniusPresentation(ring, e, q, generators, module)


@dataclass
class TorTable:
    """Vanishing table for Tor or Ext cells indexed by (i, e)."""

    kind: str                       # "tor" or "ext"
    t: int
    window: int
    entries: dict = field(default_factory=dict)   # (i, e) -> {"vanishes", "dim_k"}

    def put(self, i: int, e: int, vanishes: bool, dim_k: int | None) -> None:
        self.entries[(i, e)] = {"vanishes": vanishes, "dim_k": dim_k}

    def vanishes(self, i: int, e: int) -> bool:
        return self.entries[(i, e)]["vanishes"]

    def dim_k(self, i: int, e: int) -> int | None:
        return self.entries[(i, e)]["dim_k"]

    def cells(self) -> list[tuple[int, int]]:
        return sorted(self.entries)

    def merged_with(self, other: "TorTable") -> "TorTable":
        if other.kind != self.kind:
            raise ValueError("cannot merge tables of different kinds")
        out = TorTable(self.kind, self.t, self.window, dict(self.entries))
        out.entries.update(other.entries)
        return out

    def as_dict(self) -> dict:
        label = "Tor" if self.kind == "tor" else "Ext"
        cells = {}
        for (i, e) in self.cells():
            cell = self.entries[(i, e)]
            body = {"vanishes": cell["vanishes"]}
            if cell["dim_k"] is not None:
                body["dim_k"] = cell["dim_k"]
            cells[f"{label}({i},{e})"] = body
        return cells


def tor_frobenius(module: PresentedModule, t: int, window: int, e: int,
                  with_dims: bool = True,
                  budget_steps: int | None = None) -> TorTable:
    """Tor_i against the ring through the e-th Frobenius, for i in
    [t, t+window-1], computed by twisting a minimal free resolution."""
    if t < 1:
        raise ValueError("t must be at least 1 for module input")
    if window < 1:
        raise ValueError("window must be at least 1")
    if e < 1:
        raise ValueError("Frobenius exponent must be at least 1")
    complex_, _ = minimal_free_resolution(module, t + window,
                                          budget_steps=budget_steps)
    twisted = frobenius_twist(complex_, e)
    table = TorTable("tor", t, window)
    for i in range(t, t + window):
        vanishes, dim = homology_at(twisted, i, want_dim=with_dims,
                                    budget_steps=budget_steps)
        table.put(i, e, vanishes, dim)
    return table


def tor_frobenius_via_pushforward(module: PresentedModule, i: int, e: int,
                                  with_dims: bool = True,
                                  budget_steps: int | None = None
                                  ) -> tuple[bool, int | None]:
    """The same Tor cell computed by tensoring a resolution with the
    pushforward presentation; an independent route for cross-checks."""
    if i < 0:
        raise ValueError("homological index must be non-negative")
    if e < 1:
        raise ValueError("Frobenius exponent must be at least 1")
    push = pushforward_presentation(module.ring, e, budget_steps=budget_steps)
    complex_, betti = minimal_free_resolution(module, i + 1,
                                              budget_steps=budget_steps)
    beta_i = betti[i]
    if beta_i == 0:
        return True, 0
    d_i = complex_.map_columns(i) if i >= 1 else []
    d_next = complex_.map_columns(i + 1)
    target_rank = betti[i - 1] if i >= 1 else 0
    if i == 0:
        # Tor_0 is the plain tensor product, the cokernel of d_1 blocked
        in_cols: list[FreeVector] = []
        in_rank = 0
    else:
        in_cols = d_i
        in_rank = target_rank
    return hom_power_homology(push.module, d_next, in_rank, in_cols, beta_i,
                              want_dim=with_dims, budget_steps=budget_steps)


def ext_frobenius(module: PresentedModule, t: int, window: int, e: int,
                  with_dims: bool = True,
                  budget_steps: int | None = None) -> TorTable:
    """Ext^i against the ring through the e-th Frobenius, for i in
    [t, t+window-1]: the pushforward is resolved minimally over the ring
    and Hom(-, module) is applied."""
    if t < 0:
        raise ValueError("t must be non-negative")
    if window < 1:
        raise ValueError("window must be at least 1")
    push = pushforward_presentation(module.ring, e, budget_steps=budget_steps)
    table = TorTable("ext", t, window)
    for i in range(t, t + window):
        vanishes, dim = ext_module(push.module, module, i, want_dim=with_dims,
                                   budget_steps=budget_steps)
        table.put(i, e, vanishes, dim)
    return table


def sup_homology(complex_: FreeComplex, budget_steps: int | None = None) -> int | None:
    """Largest index with nonvanishing homology, or None for an exact complex."""
    for i in range(complex_.hi, complex_.lo - 1, -1):
        vanishes, _ = homology_at(complex_, i, want_dim=False,
                                  budget_steps=budget_steps)
        if not vanishes:
            return i
    return None
