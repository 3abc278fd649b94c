"""Presented modules, minimal graded free resolutions, homology, duality.

A module is presented as the cokernel of a matrix of relations between
free generators over a quotient ring R.  Minimal resolutions repeat two
steps: compute syzygies of the current map and keep a minimal generating
subset, selected greedily in ascending degree.  Over a graded ring the
greedy subset is a minimal generating set, so the resulting Betti numbers
are the graded ones.

Homology of complexes of presented modules is handled through one
primitive: a subquotient (U + W)/W of a free module, with U the kernel
generators pulled back through a syzygy computation and W the image
columns together with the ambient relations.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import ResourceLimitExceeded
from .groebner import (
    GroebnerBasis,
    groebner_basis,
    minimal_generating_subset,
    standard_monomials,
    syzygy_basis,
)
from .polynomials import FreeVector, Monomial, Polynomial, module_key_position
from .rings import QuotientRing


def apply_map(columns: Sequence[FreeVector], target_rank: int, ring: QuotientRing,
              vec: FreeVector) -> FreeVector:
    """Image of vec under the map whose columns are given."""
    out = FreeVector.zero(ring.base_ring, target_rank)
    for pos, poly in vec.entries():
        out = out + columns[pos].poly_mul(poly)
    return ring.reduce_vector(out)


class PresentedModule:
    """Cokernel of a relation matrix over a quotient ring.

    ``gen_degrees`` grades the generators; relation columns must be
    homogeneous for that grading, where a monomial of degree d in an entry
    counts for degree_scale * d.
    """

    def __init__(self, ring: QuotientRing, gens: int,
                 gen_degrees: Sequence[int] | None = None,
                 relations: Iterable[FreeVector] = (),
                 degree_scale: int = 1):
        if gens < 0:
            raise ValueError("the number of generators must be non-negative")
        if degree_scale < 1:
            raise ValueError("degree_scale must be positive")
        self.ring = ring
        self.gens = gens
        self.gen_degrees = (tuple(int(d) for d in gen_degrees)
                            if gen_degrees is not None else (0,) * gens)
        if len(self.gen_degrees) != gens:
            raise ValueError("gen_degrees length must match the generator count")
        self.degree_scale = degree_scale
        cleaned = []
        for rel in relations:
            if rel.ring != ring.base_ring or rel.rank != gens:
                raise ValueError("relation does not match the generator count")
            rel = ring.reduce_vector(rel)
            if rel.is_zero():
                continue
            if rel.homogeneous_degree(self.gen_degrees, degree_scale) is None:
                raise ValueError(f"relation {rel!r} is not homogeneous")
            cleaned.append(rel)
        self.relations: tuple[FreeVector, ...] = tuple(cleaned)
        self._rel_gb: GroebnerBasis | None = None
        self._minimized: "PresentedModule | None" = None
        self._res_state: dict | None = None
        self._fl: "FiniteLengthStructure | None" = None

    # -- constructors -----------------------------------------------------------

    @classmethod
    def free(cls, ring: QuotientRing, rank: int = 1,
             degrees: Sequence[int] | None = None) -> "PresentedModule":
        return cls(ring, rank, degrees, ())

    @classmethod
    def residue_field(cls, ring: QuotientRing) -> "PresentedModule":
        rels = [FreeVector.from_entries(ring.base_ring, 1,
                                        [(0, ring.base_ring.variable(v))])
                for v in ring.variables]
        return cls(ring, 1, (0,), rels)

    @classmethod
    def cyclic(cls, ring: QuotientRing, elements: Iterable) -> "PresentedModule":
        rels = []
        for item in elements:
            f = ring.poly(item)
            if f.is_zero():
                continue
            rels.append(FreeVector.from_entries(ring.base_ring, 1, [(0, f)]))
        return cls(ring, 1, (0,), rels)

    # -- basic invariants ---------------------------------------------------------

    def relation_groebner(self, budget_steps: int | None = None) -> GroebnerBasis:
        if self._rel_gb is None:
            self._rel_gb = groebner_basis(list(self.relations), self.gens, self.ring,
                                          budget_steps=budget_steps)
        return self._rel_gb

    def minimized(self, budget_steps: int | None = None) -> "PresentedModule":
        if self._minimized is None:
            self._minimized = minimize_presentation(self, budget_steps=budget_steps)
        return self._minimized

    def is_zero(self, budget_steps: int | None = None) -> bool:
        return self.minimized(budget_steps).gens == 0

    def dim_k(self, budget_steps: int | None = None) -> int | None:
        """Length over the base field, or None when infinite."""
        if self.gens == 0:
            return 0
        sm = standard_monomials(self.relation_groebner(budget_steps))
        return None if sm is None else len(sm)

    def __repr__(self) -> str:
        return (f"PresentedModule(gens={self.gens}, degrees={self.gen_degrees}, "
                f"relations={len(self.relations)} over {self.ring!r})")


def minimize_presentation(module: PresentedModule,
                          budget_steps: int | None = None) -> PresentedModule:
    """Remove unit entries by row and column operations.

    The pruned presentation has all entries in the graded maximal ideal,
    so its generator count is the minimal number of generators.
    """
    ring = module.ring
    base = ring.base_ring
    one_key = base.order.key_one(base.n)
    cols = [list(rel._terms) for rel in module.relations]
    degs = list(module.gen_degrees)
    gens = module.gens
    field = base.field

    def find_unit() -> tuple[int, int, int] | None:
        for c, terms in enumerate(cols):
            for mk, coeff in terms:
                if mk[:-1] == one_key:
                    return c, module_key_position(mk), coeff
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        c, r, u = hit
        inv = field.inv(u)
        pivot = FreeVector(base, gens, tuple(cols[c]))
        new_cols = []
        for c2, terms in enumerate(cols):
            if c2 == c:
                continue
            vec = FreeVector(base, gens, tuple(terms))
            a = vec.entry(r)
            if not a.is_zero():
                vec = vec - pivot.poly_mul(a.scaled(inv))
                vec = ring.reduce_vector(vec)
            new_cols.append(vec)
        # delete row r, renumber the rest
        gens -= 1
        degs.pop(r)
        cols = []
        for vec in new_cols:
            entries = []
            for pos, poly in vec.entries():
                if pos == r:
                    continue
                entries.append((pos - (pos > r), poly))
            shrunk = FreeVector.from_entries(base, gens, entries)
            if not shrunk.is_zero():
                cols.append(list(shrunk._terms))

    vectors = [FreeVector(base, gens, tuple(t)) for t in cols]
    return PresentedModule(ring, gens, degs, vectors, module.degree_scale)


class FreeComplex:
    """A bounded complex of free modules over a quotient ring.

    ``maps[i]`` holds the columns of the differential out of homological
    index i into index i-1, for lo < i <= hi.  Construction verifies that
    consecutive differentials compose to zero over the ring.
    """

    def __init__(self, ring: QuotientRing, lo: int, hi: int,
                 ranks: dict[int, int], maps: dict[int, list[FreeVector]],
                 degrees: dict[int, list[int]] | None = None,
                 degree_scale: int = 1, validate: bool = True):
        if lo > hi:
            raise ValueError("empty index range")
        self.ring = ring
        self.lo = lo
        self.hi = hi
        self.ranks = {i: int(ranks.get(i, 0)) for i in range(lo, hi + 1)}
        self.maps = {i: list(maps.get(i, [])) for i in range(lo + 1, hi + 1)}
        self.degrees = ({i: list(degrees.get(i, [])) for i in range(lo, hi + 1)}
                        if degrees is not None else None)
        self.degree_scale = degree_scale
        if validate:
            self._validate()

    def _validate(self) -> None:
        for i in range(self.lo + 1, self.hi + 1):
            cols = self.maps[i]
            if len(cols) != self.ranks[i]:
                raise ValueError(f"map {i} must have one column per generator")
            for col in cols:
                if col.ring != self.ring.base_ring or col.rank != self.ranks[i - 1]:
                    raise ValueError(f"map {i} columns must land in index {i - 1}")
        for i in range(self.lo + 2, self.hi + 1):
            for col in self.maps[i]:
                image = apply_map(self.maps[i - 1], self.ranks[i - 2], self.ring, col)
                if not image.is_zero():
                    raise ValueError(f"differentials at {i} and {i - 1} do not compose to zero")

    def rank(self, i: int) -> int:
        return self.ranks.get(i, 0)

    def map_columns(self, i: int) -> list[FreeVector]:
        return self.maps.get(i, [])

    def __repr__(self) -> str:
        ranks = ", ".join(f"{i}:{self.ranks[i]}" for i in range(self.lo, self.hi + 1))
        return f"FreeComplex([{self.lo}, {self.hi}], ranks {{{ranks}}})"


def _resolution_state(module: PresentedModule, budget_steps: int | None) -> dict:
    if module._res_state is None:
        pruned = module.minimized(budget_steps)
        module._res_state = {
            "pruned": pruned,
            "maps": [],           # maps[j] = columns of d_{j+1}
            "degrees": [list(pruned.gen_degrees)],
            "betti": [pruned.gens],
            "complete": pruned.gens == 0,
        }
    return module._res_state


def _extend_resolution(state: dict, steps: int, ring: QuotientRing,
                       scale: int, budget_steps: int | None) -> None:
    while len(state["betti"]) <= steps and not state["complete"]:
        level = len(state["maps"])
        if level == 0:
            candidates = list(state["pruned"].relations)
        else:
            prev_cols = state["maps"][level - 1]
            candidates = syzygy_basis(prev_cols, len(state["degrees"][level - 1]),
                                      ring, budget_steps=budget_steps)
            candidates = [ring.reduce_vector(v) for v in candidates]
            candidates = [v for v in candidates if not v.is_zero()]
        posdegs = state["degrees"][level]
        keep = minimal_generating_subset(candidates, len(posdegs), ring,
                                         position_degrees=posdegs, scale=scale,
                                         budget_steps=budget_steps)
        cols = [candidates[i] for i in keep]
        state["maps"].append(cols)
        degs = [c.homogeneous_degree(posdegs, scale) for c in cols]
        if any(d is None for d in degs):
            raise AssertionError("resolution map is not homogeneous")
        state["degrees"].append(degs)
        state["betti"].append(len(cols))
        if not cols:
            state["complete"] = True


def minimal_free_resolution(module: PresentedModule, steps: int,
                            budget_steps: int | None = None
                            ) -> tuple[FreeComplex, tuple[int, ...]]:
    """Minimal graded free resolution out to homological degree `steps`.

    Returns the complex F_steps -> ... -> F_1 -> F_0 and the Betti numbers
    (rank F_0, ..., rank F_steps).  Once a Betti number hits zero the
    resolution is complete and all later ranks are zero.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    state = _resolution_state(module, budget_steps)
    _extend_resolution(state, steps, module.ring, module.degree_scale, budget_steps)
    betti = list(state["betti"][:steps + 1])
    betti += [0] * (steps + 1 - len(betti))
    ranks = {i: betti[i] for i in range(steps + 1)}
    maps = {}
    degrees = {0: list(state["degrees"][0])}
    for i in range(1, steps + 1):
        maps[i] = state["maps"][i - 1] if i - 1 < len(state["maps"]) else []
        degrees[i] = (list(state["degrees"][i])
                      if i < len(state["degrees"]) else [])
    complex_ = FreeComplex(module.ring, 0, steps, ranks, maps, degrees,
                           module.degree_scale, validate=False)
    return complex_, tuple(betti)


def projective_dimension_oracle(module: PresentedModule,
                                budget_steps: int | None = None) -> int | float:
    """Exact projective dimension via a minimal resolution.

    Finite projective dimension over R is at most depth(R), so the
    resolution is truncated at depth(R) + 1; if no Betti number vanishes
    by then the dimension is infinite.
    """
    if module.is_zero(budget_steps):
        raise ValueError("the zero module has no projective dimension")
    bound = module.ring.invariants.depth + 1
    _, betti = minimal_free_resolution(module, bound, budget_steps=budget_steps)
    for j, b in enumerate(betti):
        if b == 0:
            return j - 1
    return math.inf


# -- subquotient primitive -------------------------------------------------------

def kernel_generators(columns: Sequence[FreeVector], source_rank: int,
                      target_rank: int, ring: QuotientRing,
                      extra_target: Sequence[FreeVector] = (),
                      budget_steps: int | None = None) -> list[FreeVector]:
    """Generators of the preimage of <extra_target> under the map given by
    the columns, i.e. of ker(R^source -> R^target / <extra_target>).

    ``columns`` must list one column per source generator.
    """
    if len(columns) != source_rank:
        raise ValueError("need exactly one column per source generator")
    if source_rank == 0:
        return []
    if target_rank == 0:
        base = ring.base_ring
        return [FreeVector.basis(base, source_rank, j) for j in range(source_rank)]
    gens = list(columns) + list(extra_target)
    syz = syzygy_basis(gens, target_rank, ring, budget_steps=budget_steps)
    out = []
    for s in syz:
        v = ring.reduce_vector(s.project(0, source_rank))
        if not v.is_zero():
            out.append(v)
    return out


def subquotient_vanishes_and_dim(u_gens: Sequence[FreeVector],
                                 w_gens: Sequence[FreeVector],
                                 ambient_rank: int, ring: QuotientRing,
                                 want_dim: bool = True,
                                 budget_steps: int | None = None
                                 ) -> tuple[bool, int | None]:
    """Is (U + W)/W zero, and if not, its length over the base field.

    Returns (vanishes, dim); dim is None when not requested or infinite.
    """
    gb_w = groebner_basis(list(w_gens), ambient_rank, ring, budget_steps=budget_steps)
    residual = [u for u in u_gens if not gb_w.contains(u)]
    if not residual:
        return True, 0
    if not want_dim:
        return False, None
    combined = list(u_gens) + list(w_gens)
    syz = syzygy_basis(combined, ambient_rank, ring, budget_steps=budget_steps)
    rels = []
    for s in syz:
        v = ring.reduce_vector(s.project(0, len(u_gens)))
        if not v.is_zero():
            rels.append(v)
    gb_h = groebner_basis(rels, len(u_gens), ring, budget_steps=budget_steps)
    sm = standard_monomials(gb_h)
    return False, (None if sm is None else len(sm))


def homology_at(complex_: FreeComplex, i: int, want_dim: bool = False,
                budget_steps: int | None = None) -> tuple[bool, int | None]:
    """Vanishing (and optionally length) of H_i of a complex of free modules."""
    r_i = complex_.rank(i)
    if r_i == 0:
        return True, 0
    ring = complex_.ring
    base = ring.base_ring
    if i > complex_.lo:
        u = kernel_generators(complex_.map_columns(i), r_i, complex_.rank(i - 1),
                              ring, budget_steps=budget_steps)
    else:
        u = [FreeVector.basis(base, r_i, j) for j in range(r_i)]
    w = complex_.map_columns(i + 1)
    return subquotient_vanishes_and_dim(u, w, r_i, ring, want_dim=want_dim,
                                        budget_steps=budget_steps)


def homology_is_zero(complex_: FreeComplex, i: int,
                     budget_steps: int | None = None) -> bool:
    return homology_at(complex_, i, want_dim=False, budget_steps=budget_steps)[0]


# -- block constructions for Hom and tensor ---------------------------------------

def block_columns(scalar_cols: Sequence[FreeVector], inner: int,
                  target_scalar_rank: int, base_ring) -> list[FreeVector]:
    """Columns of A tensor identity, for A given by scalar columns.

    Source position (u, s) maps to column index u*inner + s; entry a at
    scalar row v lands at row v*inner + s.
    """
    out = []
    for col in scalar_cols:
        entries = col.entries()
        for s in range(inner):
            shifted = [(v * inner + s, poly) for v, poly in entries]
            out.append(FreeVector.from_entries(base_ring, target_scalar_rank * inner,
                                               shifted))
    return out


def transpose_columns(cols: Sequence[FreeVector], source_rank: int,
                      base_ring) -> list[FreeVector]:
    """Columns of the transpose of the matrix whose columns are given.

    ``source_rank`` is the rank the given columns live in; the result has
    ``source_rank`` columns of rank len(cols).
    """
    out = []
    for u in range(source_rank):
        entries = [(v, col.entry(u)) for v, col in enumerate(cols)]
        entries = [(v, poly) for v, poly in entries if not poly.is_zero()]
        out.append(FreeVector.from_entries(base_ring, len(cols), entries))
    return out


def embed_relations(relations: Sequence[FreeVector], inner: int,
                    copies: int, base_ring) -> list[FreeVector]:
    """The relation columns of X placed in every copy of X^copies."""
    out = []
    for u in range(copies):
        for rel in relations:
            out.append(rel.embed(u * inner, copies * inner))
    return out


def hom_power_homology(x_module: PresentedModule,
                       prev_scalar_cols: Sequence[FreeVector],
                       in_scalar_cols_rank: int,
                       in_scalar_cols: Sequence[FreeVector],
                       source_copies: int,
                       want_dim: bool = True,
                       budget_steps: int | None = None) -> tuple[bool, int | None]:
    """Homology of X^a -> X^b at the middle of ... -> X^a -> X^b -> ...

    The incoming map into X^source_copies has the given previous scalar
    columns; the outgoing map has ``in_scalar_cols`` (each of scalar rank
    ``in_scalar_cols_rank``).  All maps act coordinatewise on X.
    """
    ring = x_module.ring
    base = ring.base_ring
    g = x_module.gens
    a = source_copies
    if a == 0 or g == 0:
        return True, 0
    b = in_scalar_cols_rank
    rels = list(x_module.relations)
    if b == 0 or not in_scalar_cols:
        u_gens = [FreeVector.basis(base, a * g, j) for j in range(a * g)]
    else:
        blocked = block_columns(in_scalar_cols, g, b, base)
        extra = embed_relations(rels, g, b, base)
        u_gens = kernel_generators(blocked, a * g, b * g, ring, extra_target=extra,
                                   budget_steps=budget_steps)
    w_gens = block_columns(prev_scalar_cols, g, a, base) if prev_scalar_cols else []
    w_gens = list(w_gens) + embed_relations(rels, g, a, base)
    return subquotient_vanishes_and_dim(u_gens, w_gens, a * g, ring,
                                        want_dim=want_dim, budget_steps=budget_steps)


def ext_module(a_module: PresentedModule, m_module: PresentedModule, i: int,
               want_dim: bool = True, budget_steps: int | None = None
               ) -> tuple[bool, int | None]:
    """Vanishing (and length) of Ext^i(A, M) over the common ring.

    A is resolved minimally out to step i+1 and the Hom complex into M is
    formed; the value does not depend on the chosen resolution.
    """
    if a_module.ring != m_module.ring:
        raise ValueError("modules live over different rings")
    if i < 0:
        return True, 0
    complex_, betti = minimal_free_resolution(a_module, i + 1,
                                              budget_steps=budget_steps)
    gamma_i = betti[i]
    if gamma_i == 0:
        return True, 0
    base = a_module.ring.base_ring
    # delta^i is the transpose of d_{i+1}; delta^{i-1} the transpose of d_i
    delta_i = transpose_columns(complex_.map_columns(i + 1), gamma_i, base)
    gamma_next = betti[i + 1]
    if i >= 1:
        delta_prev = transpose_columns(complex_.map_columns(i), betti[i - 1], base)
    else:
        delta_prev = []
    return hom_power_homology(m_module, delta_prev, gamma_next, delta_i,
                              gamma_i, want_dim=want_dim, budget_steps=budget_steps)


# -- finite length modules and duality ---------------------------------------------

class FiniteLengthStructure:
    """A finite length module spread out over a monomial basis.

    ``basis`` lists (generator position, monomial) pairs; ``action[v]`` is
    the matrix of multiplication by the v-th variable, column j holding
    the coordinates of x_v times the j-th basis element.
    """

    def __init__(self, module: PresentedModule, basis: list[tuple[int, Monomial]],
                 action: list[list[list[int]]], degrees: list[int]):
        self.module = module
        self.basis = basis
        self.action = action
        self.degrees = degrees

    @property
    def dim_k(self) -> int:
        return len(self.basis)


def finite_length_structure(module: PresentedModule,
                            budget_steps: int | None = None) -> FiniteLengthStructure:
    ring = module.ring
    base = ring.base_ring
    gb = module.relation_groebner(budget_steps)
    sm = standard_monomials(gb)
    if sm is None:
        raise ValueError("the module does not have finite length")
    index = {entry: k for k, entry in enumerate(sm)}
    lam = len(sm)
    action: list[list[list[int]]] = []
    for v in range(base.n):
        xv = base.variable(base.variables[v])
        matrix = [[0] * lam for _ in range(lam)]
        for j, (pos, mono) in enumerate(sm):
            shifted = FreeVector.from_entries(base, module.gens,
                                              [(pos, base.term(mono, 1) * xv)])
            nf = gb.normal_form(shifted)
            for p2, poly in nf.entries():
                for m2, coeff in poly.terms():
                    k = index[(p2, m2)]
                    matrix[k][j] = coeff
        action.append(matrix)
    degrees = [module.gen_degrees[pos] + module.degree_scale * mono.total_degree
               for pos, mono in sm]
    return FiniteLengthStructure(module, list(sm), action, degrees)


def finite_length_dual(module: PresentedModule,
                       budget_steps: int | None = None) -> PresentedModule:
    """Graded dual Hom_k(M, k) of a finite length module.

    The dual of the basis carries the transposed variable action; degrees
    are reflected so that the result is non-negatively graded.
    """
    fl = finite_length_structure(module, budget_steps)
    ring = module.ring
    base = ring.base_ring
    lam = fl.dim_k
    if lam == 0:
        return PresentedModule(ring, 0, (), (), module.degree_scale)
    top = max(fl.degrees)
    dual_degs = [top - d for d in fl.degrees]
    rels = []
    for v in range(base.n):
        xv = base.variable(base.variables[v])
        matrix = fl.action[v]
        for j in range(lam):
            entries: dict[int, Polynomial] = {j: xv}
            for k in range(lam):
                c = matrix[j][k]
                if c:
                    entries[k] = entries.get(k, base.zero()) - base.constant(c)
            col = FreeVector.from_entries(base, lam,
                                          [(pos, poly) for pos, poly in entries.items()
                                           if not poly.is_zero()])
            if not col.is_zero():
                rels.append(col)
    return PresentedModule(ring, lam, dual_degs, rels, module.degree_scale)
