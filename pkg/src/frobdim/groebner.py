"""Buchberger engine for submodules of free modules, with syzygy tracking.

The engine works over S = F_p[x_1..x_n] throughout.  Submodules of free
modules over a quotient R = S/I are handled by adjoining the columns
I*e_j to the generators and working with preimages in the free S-module;
callers that live over R reduce entries mod I afterwards.

Pair selection is the normal strategy: lowest lcm degree first, ties by
insertion indices.  Reduction always picks the earliest basis element whose
lead divides the current term, so runs are deterministic.

Two classical pair skips are applied, both disabled while tracking
cofactors (completeness of the recorded zero-reduction syzygies requires
every pair to be reduced):

* coprime leads, only for pairs of elements supported in a single position
  (the module analogue fails otherwise: with f = x*e1 + e2 and g = y*e1 the
  leads are coprime but y*f - x*g = y*e2 is a new element);
* the chain skip in a conservative form: a third element's lead divides the
  pair lcm strictly on both sides and both side pairs were already reduced.

While tracking, generators enter the basis unreduced so that each input
keeps the unit cofactor on itself; the recorded cofactors of zero
reductions then generate the full syzygy module of the inputs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ResourceLimitExceeded
from .polynomials import (
    FreeVector,
    Monomial,
    PolyRing,
    Polynomial,
    merge_terms,
    module_key,
    module_key_position,
    scale_terms,
    shift_terms,
)

DEFAULT_STEP_BUDGET = 10**6
STANDARD_MONOMIAL_CAP = 10**6


class StepBudget:
    """Mutable countdown of reduction steps shared by one computation."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = DEFAULT_STEP_BUDGET if limit is None else int(limit)
        if self.limit <= 0:
            raise ValueError("step budget must be positive")
        self.used = 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise ResourceLimitExceeded(
                f"computation exceeded the step budget of {self.limit}",
                used=self.used, limit=self.limit)


def _ring_parts(ring_like) -> tuple[PolyRing, tuple[Polynomial, ...]]:
    """Split a PolyRing or quotient-ring-like object into (base, ideal basis)."""
    base = getattr(ring_like, "base_ring", None)
    if base is None:
        return ring_like, ()
    return base, tuple(ring_like.ideal_groebner_polys())


def _lift_columns(base: PolyRing, ideal: Sequence[Polynomial], rank: int) -> list[FreeVector]:
    cols = []
    for j in range(rank):
        for f in ideal:
            cols.append(FreeVector.from_entries(base, rank, [(j, f)]))
    return cols


class BuchbergerEngine:
    """Incremental Buchberger over a free S-module."""

    def __init__(self, ring: PolyRing, rank: int, *, budget: StepBudget | None = None,
                 track: bool = False, use_criteria: bool = True):
        self.ring = ring
        self.order = ring.order
        self.rank = rank
        self.p = ring.p
        self.budget = budget if budget is not None else StepBudget()
        self.track = track
        self.use_criteria = use_criteria and not track
        self.tracked_width = 0
        self.elements: list[list] = []       # monic term lists
        self.cofactors: list[list] = []      # term lists over the input space
        self.lead_pos: list[int] = []
        self.lead_mono: list[tuple] = []     # ring key of the lead monomial
        self.single_pos: list[bool] = []     # support confined to the lead position
        self.by_pos: dict[int, list[int]] = {}
        self.pairs: list[tuple] = []         # heap of (lcm degree, i, j), i < j
        self.reduced_pairs: set[tuple[int, int]] = set()
        self.zero_cofactors: list[list] = []

    # -- reduction ------------------------------------------------------------

    def _find_reducer(self, pos: int, mono: tuple) -> int | None:
        order = self.order
        for idx in self.by_pos.get(pos, ()):
            if order.key_divides(self.lead_mono[idx], mono):
                return idx
        return None

    def reduce(self, terms: list, cof: list | None = None) -> tuple[list, list | None]:
        """Full normal form against the current basis; cofactor updated in step."""
        order, p = self.order, self.p
        out: list = []
        work = list(terms)
        while work:
            mk, c = work[0]
            pos = module_key_position(mk)
            mono = mk[:-1]
            idx = self._find_reducer(pos, mono)
            if idx is None:
                out.append(work[0])
                work = work[1:]
                continue
            self.budget.spend()
            quot = order.key_quotient(mono, self.lead_mono[idx])
            padded = quot + (0,)
            neg = (-c) % p
            work = merge_terms(work, shift_terms(self.elements[idx], padded, neg, p), p)
            if cof is not None:
                cof = merge_terms(cof, shift_terms(self.cofactors[idx], padded, neg, p), p)
        return out, cof

    # -- basis growth -----------------------------------------------------------

    def _append(self, terms: list, cof: list) -> None:
        mk, c = terms[0]
        if c != 1:
            inv = self.ring.field.inv(c)
            terms = scale_terms(terms, inv, self.p)
            cof = scale_terms(cof, inv, self.p)
        idx = len(self.elements)
        pos = module_key_position(mk)
        mono = mk[:-1]
        self.elements.append(terms)
        self.cofactors.append(cof)
        self.lead_pos.append(pos)
        self.lead_mono.append(mono)
        self.single_pos.append(all(module_key_position(k) == pos for k, _ in terms))
        self.by_pos.setdefault(pos, []).append(idx)
        for other in self.by_pos[pos]:
            if other != idx:
                lcm = self.order.key_lcm(self.lead_mono[other], mono)
                heapq.heappush(self.pairs, (self.order.key_degree(lcm), other, idx))

    def add_generator(self, vec: FreeVector) -> None:
        if vec.ring != self.ring or vec.rank != self.rank:
            raise ValueError("generator does not live in the engine's free module")
        tracked_index = self.tracked_width
        self.tracked_width += 1
        cof = [(module_key(self.order.key_one(self.ring.n), tracked_index), 1)]
        terms = list(vec._terms)
        if self.track:
            # keep inputs raw so every input carries a unit cofactor on itself
            if not terms:
                self.zero_cofactors.append(cof)
                return
            self._append(terms, cof)
            return
        terms, cof = self.reduce(terms, cof)
        if not terms:
            if cof:
                self.zero_cofactors.append(cof)
            return
        self._append(terms, cof)

    # -- pair processing ----------------------------------------------------------

    def _skip_pair(self, i: int, j: int, lcm: tuple) -> bool:
        if not self.use_criteria:
            return False
        mi, mj = self.lead_mono[i], self.lead_mono[j]
        if (self.single_pos[i] and self.single_pos[j]
                and lcm == self.order.key_mul(mi, mj)):
            return True
        order = self.order
        for k in self.by_pos.get(self.lead_pos[i], ()):
            if k == i or k == j:
                continue
            mk = self.lead_mono[k]
            if not order.key_divides(mk, lcm):
                continue
            if order.key_lcm(mi, mk) == lcm or order.key_lcm(mj, mk) == lcm:
                continue
            a, b = min(i, k), max(i, k)
            c, d = min(j, k), max(j, k)
            if (a, b) in self.reduced_pairs and (c, d) in self.reduced_pairs:
                return True
        return False

    def saturate(self) -> None:
        order, p = self.order, self.p
        while self.pairs:
            _, i, j = heapq.heappop(self.pairs)
            lcm = order.key_lcm(self.lead_mono[i], self.lead_mono[j])
            if self._skip_pair(i, j, lcm):
                continue
            self.reduced_pairs.add((i, j))
            qi = order.key_quotient(lcm, self.lead_mono[i]) + (0,)
            qj = order.key_quotient(lcm, self.lead_mono[j]) + (0,)
            spair = merge_terms(shift_terms(self.elements[i], qi, 1, p),
                                shift_terms(self.elements[j], qj, p - 1, p), p)
            cof = None
            if self.track:
                cof = merge_terms(shift_terms(self.cofactors[i], qi, 1, p),
                                  shift_terms(self.cofactors[j], qj, p - 1, p), p)
            spair, cof = self.reduce(spair, cof)
            if spair:
                self._append(spair, cof if cof is not None else [])
            elif self.track and cof:
                self.zero_cofactors.append(cof)

    # -- canonical output -----------------------------------------------------------

    def interreduced(self) -> list[list]:
        """The reduced basis: minimal monic leads, tails in normal form."""
        order = self.order
        kept: list[int] = []
        for i in range(len(self.elements)):
            li, pi = self.lead_mono[i], self.lead_pos[i]
            redundant = False
            for j in range(len(self.elements)):
                if j == i or self.lead_pos[j] != pi:
                    continue
                lj = self.lead_mono[j]
                if lj == li:
                    if j < i:
                        redundant = True
                        break
                elif order.key_divides(lj, li):
                    redundant = True
                    break
            if not redundant:
                kept.append(i)
        basis = [list(self.elements[i]) for i in kept]
        changed = True
        while changed:
            changed = False
            for a in range(len(basis)):
                others = _ReducerView(self, [basis[b] for b in range(len(basis)) if b != a])
                nf, _ = others.reduce(basis[a])
                if nf != basis[a]:
                    basis[a] = nf
                    changed = True
        basis.sort(key=lambda t: t[0][0], reverse=True)
        return basis


class _ReducerView:
    """Reduction against an explicit list of monic term lists."""

    def __init__(self, engine: BuchbergerEngine, elements: list[list]):
        self.order = engine.order
        self.p = engine.p
        self.budget = engine.budget
        self.elements = elements
        self.by_pos: dict[int, list[int]] = {}
        self.lead_mono = []
        for idx, terms in enumerate(elements):
            mk = terms[0][0]
            self.lead_mono.append(mk[:-1])
            self.by_pos.setdefault(module_key_position(mk), []).append(idx)

    def reduce(self, terms: list, cof=None) -> tuple[list, None]:
        order, p = self.order, self.p
        out: list = []
        work = list(terms)
        while work:
            mk, c = work[0]
            pos = module_key_position(mk)
            mono = mk[:-1]
            hit = None
            for idx in self.by_pos.get(pos, ()):
                if order.key_divides(self.lead_mono[idx], mono):
                    hit = idx
                    break
            if hit is None:
                out.append(work[0])
                work = work[1:]
                continue
            self.budget.spend()
            quot = order.key_quotient(mono, self.lead_mono[hit]) + (0,)
            work = merge_terms(work, shift_terms(self.elements[hit], quot, (-c) % p, p), p)
        return out, None


@dataclass(frozen=True)
class SubmodulePresentation:
    """Generators of a submodule of a free module over S or a quotient of S."""

    ring: object
    ambient_rank: int
    generators: tuple[FreeVector, ...]

    def __post_init__(self):
        base, _ = _ring_parts(self.ring)
        for g in self.generators:
            if g.ring != base or g.rank != self.ambient_rank:
                raise ValueError("generator does not match the ambient free module")


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis of the S-preimage of a submodule.

    Over a quotient ring the elements include the contributions of the
    defining ideal in every position, so normal forms are automatically
    normal mod the ideal.
    """

    ring: object
    ambient_rank: int
    elements: tuple[FreeVector, ...]
    _nf: "_ReducerView" = field(repr=False, compare=False)

    def normal_form(self, vec: FreeVector) -> FreeVector:
        base, _ = _ring_parts(self.ring)
        if vec.ring != base or vec.rank != self.ambient_rank:
            raise ValueError("vector does not match the ambient free module")
        nf, _ = self._nf.reduce(list(vec._terms))
        return FreeVector(base, self.ambient_rank, tuple(nf))

    def contains(self, vec: FreeVector) -> bool:
        return self.normal_form(vec).is_zero()

    def lead_monomials(self) -> list[tuple[int, Monomial]]:
        """(position, monomial) of each element's lead, in element order."""
        base, _ = _ring_parts(self.ring)
        out = []
        for el in self.elements:
            mk = el.leading_key()
            out.append((module_key_position(mk),
                        Monomial(base.order.exponents_of(mk[:-1], base.n))))
        return out


def _make_engine(generators: Sequence[FreeVector], ambient_rank: int, ring_like,
                 *, budget: StepBudget, track: bool = False) -> tuple[BuchbergerEngine, int]:
    base, ideal = _ring_parts(ring_like)
    engine = BuchbergerEngine(base, ambient_rank, budget=budget, track=track)
    for g in generators:
        engine.add_generator(g)
    for col in _lift_columns(base, ideal, ambient_rank):
        engine.add_generator(col)
    return engine, len(generators)


def groebner_basis(generators: Sequence[FreeVector], ambient_rank: int, ring_like,
                   *, budget_steps: int | None = None) -> GroebnerBasis:
    base, _ = _ring_parts(ring_like)
    engine, _ = _make_engine(generators, ambient_rank, ring_like,
                             budget=StepBudget(budget_steps))
    engine.saturate()
    reduced = engine.interreduced()
    elements = tuple(FreeVector(base, ambient_rank, tuple(t)) for t in reduced)
    return GroebnerBasis(ring_like, ambient_rank, elements,
                         _ReducerView(engine, reduced))


def normal_form(vec: FreeVector, gb: GroebnerBasis) -> FreeVector:
    return gb.normal_form(vec)


def syzygy_basis(generators: Sequence[FreeVector], ambient_rank: int, ring_like,
                 *, budget_steps: int | None = None) -> list[FreeVector]:
    """Generators of the syzygy module of the given vectors.

    Over a quotient ring the result is reduced mod the ideal entrywise and
    zero rows are dropped; the vectors live in a free module of rank equal
    to the number of input generators.
    """
    base, ideal = _ring_parts(ring_like)
    engine, width = _make_engine(generators, ambient_rank, ring_like,
                                 budget=StepBudget(budget_steps), track=True)
    engine.saturate()
    seen: set = set()
    out: list[FreeVector] = []
    for cof in engine.zero_cofactors:
        vec = FreeVector(base, engine.tracked_width, tuple(cof)).project(0, width)
        if ideal:
            vec = _reduce_entries(vec, ring_like)
        if vec.is_zero() or vec._terms in seen:
            continue
        seen.add(vec._terms)
        out.append(vec)
    return out


def _reduce_entries(vec: FreeVector, ring_like) -> FreeVector:
    base, _ = _ring_parts(ring_like)
    entries = [(pos, ring_like.reduce(poly)) for pos, poly in vec.entries()]
    return FreeVector.from_entries(base, vec.rank, entries)


def is_zero_cokernel(columns: Sequence[FreeVector], ambient_rank: int, ring_like,
                     *, budget_steps: int | None = None) -> bool:
    """Do the columns generate the full free module over the ring?"""
    if ambient_rank == 0:
        return True
    base, _ = _ring_parts(ring_like)
    gb = groebner_basis(columns, ambient_rank, ring_like, budget_steps=budget_steps)
    return all(gb.contains(FreeVector.basis(base, ambient_rank, j))
               for j in range(ambient_rank))


def minimal_generating_subset(vectors: Sequence[FreeVector], ambient_rank: int, ring_like,
                              position_degrees: Sequence[int] | None = None,
                              scale: int = 1,
                              *, budget_steps: int | None = None) -> list[int]:
    """Indices of a minimal generating subset, in ascending degree order.

    For graded inputs the greedy sweep in ascending degree yields a minimal
    generating set of the submodule the vectors span.
    """
    base, ideal = _ring_parts(ring_like)
    order = base.order

    def degree_of(v: FreeVector) -> int:
        posdegs = position_degrees if position_degrees is not None else [0] * ambient_rank
        best = 0
        for mk, _ in v._terms:
            d = scale * order.key_degree(mk[:-1]) + posdegs[module_key_position(mk)]
            best = max(best, d)
        return best

    ranked = sorted((i for i, v in enumerate(vectors) if not v.is_zero()),
                    key=lambda i: (degree_of(vectors[i]), vectors[i].leading_key(), i))
    budget = StepBudget(budget_steps)
    engine = BuchbergerEngine(base, ambient_rank, budget=budget)
    for col in _lift_columns(base, ideal, ambient_rank):
        engine.add_generator(col)
    engine.saturate()
    kept: list[int] = []
    for i in ranked:
        nf, _ = engine.reduce(list(vectors[i]._terms))
        if not nf:
            continue
        engine._append(nf, [])
        engine.saturate()
        kept.append(i)
    return kept


def standard_monomials(gb: GroebnerBasis, cap: int = STANDARD_MONOMIAL_CAP
                       ) -> list[tuple[int, Monomial]] | None:
    """Monomial basis of the quotient by the submodule, or None if infinite.

    Enumerates, for every position, the monomials outside the lead ideal of
    the basis.  Positions ascending, monomials ascending in the ring order.
    """
    base, _ = _ring_parts(gb.ring)
    n = base.n
    leads: dict[int, list[tuple[int, ...]]] = {}
    for pos, mono in gb.lead_monomials():
        leads.setdefault(pos, []).append(mono.exponents)
    out: list[tuple[int, Monomial]] = []
    for pos in range(gb.ambient_rank):
        pos_leads = leads.get(pos, [])
        bounds = []
        for v in range(n):
            pure = [e[v] for e in pos_leads if all(e[w] == 0 for w in range(n) if w != v)]
            if not pure:
                return None
            bounds.append(min(pure))
        total = 1
        for b in bounds:
            total *= max(b, 1)
        if total > cap:
            raise ResourceLimitExceeded(
                f"standard monomial enumeration exceeds the cap of {cap}")
        box: list[tuple[int, ...]] = [()]
        for b in bounds:
            box = [e + (i,) for e in box for i in range(b)] if b > 0 else []
        standard = [e for e in box
                    if not any(all(le[v] <= e[v] for v in range(n)) for le in pos_leads)]
        standard.sort(key=base.order.key)
        out.extend((pos, Monomial(e)) for e in standard)
    return out
