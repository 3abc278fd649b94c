"""Graded quotient rings R = S/I and their numerical invariants.

The Hilbert series of R is computed from the lead ideal of a reduced
basis of I by the additive splitting N(J) = N(J + (x)) + t * N(J : x),
with products of pairwise coprime monomials as the closed-form base case.
Dimension comes from maximal independent variable subsets of the lead
ideal, depth from the length of a minimal free resolution of R over S,
and the complete intersection test compares the minimal number of ideal
generators with the height.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ResourceLimitExceeded
from .groebner import GroebnerBasis, groebner_basis, standard_monomials
from .polynomials import GREVLEX, FreeVector, Monomial, PolyRing, Polynomial


# -- integer polynomials as coefficient lists --------------------------------

def _ipoly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


def _ipoly_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return out


def _ipoly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, va in enumerate(a):
        if va:
            for j, vb in enumerate(b):
                out[i + j] += va * vb
    return out


def _ipoly_shift(a: Sequence[int], k: int) -> list[int]:
    return [0] * k + list(a)


def _divide_by_one_minus_t(c: Sequence[int]) -> list[int] | None:
    """Exact quotient by (1 - t), or None when not divisible."""
    q: list[int] = []
    carry = 0
    for coeff in c:
        carry += coeff
        q.append(carry)
    if q and q[-1] != 0:
        return None
    return q[:-1] if len(q) > 1 else [0]


# -- monomial ideal combinatorics ---------------------------------------------

def _minimize_monomial_gens(gens: Iterable[tuple[int, ...]]) -> frozenset[tuple[int, ...]]:
    gens = set(gens)
    kept = set()
    for g in gens:
        if not any(h != g and all(a <= b for a, b in zip(h, g)) for h in gens):
            kept.add(g)
    return frozenset(kept)


def _numerator_of_monomial_ideal(gens: frozenset[tuple[int, ...]], n: int,
                                 memo: dict) -> tuple[int, ...]:
    gens = _minimize_monomial_gens(gens)
    cached = memo.get(gens)
    if cached is not None:
        return cached
    if not gens:
        result: tuple[int, ...] = (1,)
    elif any(sum(g) == 0 for g in gens):
        result = (0,)
    else:
        supports = [frozenset(v for v in range(n) if g[v]) for g in gens]
        var_count: dict[int, int] = {}
        for s in supports:
            for v in s:
                var_count[v] = var_count.get(v, 0) + 1
        best_v = max(sorted(var_count), key=lambda v: var_count[v], default=None)
        if best_v is None or var_count[best_v] <= 1:
            # pairwise coprime generators form a regular sequence
            acc = [1]
            for g in gens:
                factor = [1] + [0] * (sum(g) - 1) + [-1]
                acc = _ipoly_mul(acc, factor)
            result = _ipoly_trim(acc)
        else:
            unit = tuple(1 if v == best_v else 0 for v in range(n))
            plus = frozenset(g for g in gens if g[best_v] == 0) | {unit}
            colon = frozenset(tuple(max(e - 1, 0) if v == best_v else e
                                    for v, e in enumerate(g)) for g in gens)
            n_plus = _numerator_of_monomial_ideal(plus, n, memo)
            n_colon = _numerator_of_monomial_ideal(colon, n, memo)
            result = _ipoly_trim(_ipoly_add(n_plus, _ipoly_shift(n_colon, 1)))
    memo[gens] = result
    return result


def _dimension_of_monomial_ideal(gens: frozenset[tuple[int, ...]], n: int) -> int:
    gens = _minimize_monomial_gens(gens)
    if any(sum(g) == 0 for g in gens):
        raise ValueError("the monomial ideal is the unit ideal")
    supports = [frozenset(v for v in range(n) if g[v]) for g in gens]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = frozenset(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


@dataclass(frozen=True)
class RingInvariants:
    """Numerical profile of a graded quotient ring."""

    num_vars: int
    dim: int
    depth: int
    multiplicity: int
    length: int | None           # None when the ring has positive dimension
    hilbert_numerator: tuple[int, ...]
    ideal_min_gens: int
    is_cohen_macaulay: bool
    is_complete_intersection: bool
    e_threshold: int             # least e >= 0 with p^e >= multiplicity
    r_window: int                # max(1, dim)

    def as_dict(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "dim": self.dim,
            "depth": self.depth,
            "multiplicity": self.multiplicity,
            "length": self.length,
            "hilbert_numerator": list(self.hilbert_numerator),
            "ideal_min_gens": self.ideal_min_gens,
            "is_cohen_macaulay": self.is_cohen_macaulay,
            "is_complete_intersection": self.is_complete_intersection,
            "e_threshold": self.e_threshold,
            "r_window": self.r_window,
        }


class QuotientRing:
    """R = F_p[x_1..x_n]/I for a homogeneous ideal I.

    The reduced basis of I and the invariant profile are computed once and
    cached; construction validates that I is proper and homogeneous.
    """

    def __init__(self, p: int, variables: Iterable[str],
                 ideal: Iterable = (), order: str = GREVLEX,
                 budget_steps: int | None = None):
        self.base_ring = PolyRing(p, variables, order)
        gens = []
        for item in ideal:
            f = self.base_ring.poly(item)
            if f.is_zero():
                continue
            if f.homogeneous_degree() is None:
                raise ValueError(f"ideal generator {f} is not homogeneous")
            if f.homogeneous_degree() == 0:
                raise ValueError("the ideal contains a unit; the quotient ring is zero")
            gens.append(f)
        self.ideal_gens: tuple[Polynomial, ...] = tuple(gens)
        self._budget_steps = budget_steps
        self._gb: GroebnerBasis | None = None
        self._invariants: RingInvariants | None = None

    @property
    def p(self) -> int:
        return self.base_ring.p

    @property
    def variables(self) -> tuple[str, ...]:
        return self.base_ring.variables

    @property
    def n(self) -> int:
        return self.base_ring.n

    @property
    def ideal(self) -> tuple[Polynomial, ...]:
        return self.ideal_gens

    @property
    def budget_steps(self) -> int | None:
        return self._budget_steps

    def is_polynomial_ring(self) -> bool:
        return not self.ideal_gens

    # -- cached reduced basis of I -------------------------------------------

    def ideal_groebner(self) -> GroebnerBasis:
        if self._gb is None:
            cols = [FreeVector.from_entries(self.base_ring, 1, [(0, f)])
                    for f in self.ideal_gens]
            gb = groebner_basis(cols, 1, self.base_ring,
                                budget_steps=self._budget_steps)
            for el in gb.elements:
                if el.entry(0).is_constant():
                    raise ValueError("the ideal contains a unit; the quotient ring is zero")
            self._gb = gb
        return self._gb

    def ideal_groebner_polys(self) -> tuple[Polynomial, ...]:
        return tuple(el.entry(0) for el in self.ideal_groebner().elements)

    # -- normal forms ----------------------------------------------------------

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.base_ring:
            raise ValueError("polynomial belongs to a different ring")
        if not self.ideal_gens:
            return f
        vec = FreeVector.from_entries(self.base_ring, 1, [(0, f)])
        return self.ideal_groebner().normal_form(vec).entry(0)

    def reduce_vector(self, vec: FreeVector) -> FreeVector:
        if not self.ideal_gens:
            return vec
        entries = [(pos, self.reduce(poly)) for pos, poly in vec.entries()]
        return FreeVector.from_entries(self.base_ring, vec.rank, entries)

    def is_zero_element(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def poly(self, value) -> Polynomial:
        return self.reduce(self.base_ring.poly(value))

    def vector(self, rank: int, entries: Iterable[tuple[int, object]]) -> FreeVector:
        pairs = [(pos, self.base_ring.poly(v)) for pos, v in entries]
        return self.reduce_vector(FreeVector.from_entries(self.base_ring, rank, pairs))

    # -- invariants ------------------------------------------------------------

    @property
    def invariants(self) -> RingInvariants:
        if self._invariants is None:
            self._invariants = ring_profile(self)
        return self._invariants

    def __eq__(self, other) -> bool:
        return (isinstance(other, QuotientRing)
                and other.base_ring == self.base_ring
                and other.ideal_groebner_polys() == self.ideal_groebner_polys())

    def __hash__(self) -> int:
        return hash(("QuotientRing", self.base_ring))

    def __repr__(self) -> str:
        ideal = ", ".join(str(f) for f in self.ideal_gens) or "0"
        return (f"QuotientRing(F_{self.p}[{', '.join(self.variables)}] / ({ideal}))")


def hilbert_numerator(ring: QuotientRing) -> tuple[int, ...]:
    """Coefficients of Q(t) with series Q(t)/(1-t)^n, from the lead ideal."""
    leads = frozenset(m.exponents for _, m in ring.ideal_groebner().lead_monomials())
    return _numerator_of_monomial_ideal(leads, ring.n, {})


def hilbert_numerator_from_resolution(ring: QuotientRing,
                                      budget_steps: int | None = None) -> tuple[int, ...]:
    """The same numerator, recomputed as the alternating sum of shifts in a
    minimal graded free resolution of R over the polynomial ring.  Serves as
    an independent cross-check of the combinatorial route."""
    from .resolutions import PresentedModule, minimal_free_resolution

    S = QuotientRing(ring.p, ring.variables, (), ring.base_ring.order.kind)
    pres = PresentedModule(
        S, 1, (0,),
        tuple(FreeVector.from_entries(ring.base_ring, 1, [(0, f)])
              for f in ring.ideal_gens))
    complex_, betti = minimal_free_resolution(pres, ring.n + 1,
                                              budget_steps=budget_steps)
    acc: list[int] = [0]
    sign = 1
    for i in range(0, complex_.hi + 1):
        degs = complex_.degrees.get(i, [])
        contrib = [0] * (max(degs, default=0) + 1)
        for d in degs:
            contrib[d] += 1
        acc = _ipoly_add(acc, [sign * c for c in contrib])
        sign = -sign
    return _ipoly_trim(acc)


def ring_profile(ring: QuotientRing) -> RingInvariants:
    """Compute the full invariant profile of R = S/I."""
    from .resolutions import PresentedModule, minimal_free_resolution

    n = ring.n
    leads = frozenset(m.exponents for _, m in ring.ideal_groebner().lead_monomials())
    numerator = _numerator_of_monomial_ideal(leads, n, {})
    dim = _dimension_of_monomial_ideal(leads, n) if leads else n

    h = list(numerator)
    divisions = 0
    while True:
        q = _divide_by_one_minus_t(h)
        if q is None:
            break
        h = q
        divisions += 1
    if divisions != n - dim:
        raise AssertionError(
            f"numerator divisibility {divisions} disagrees with codimension {n - dim}")
    multiplicity = sum(h)
    if multiplicity <= 0:
        raise AssertionError("multiplicity must be positive for a nonzero ring")

    length: int | None = multiplicity if dim == 0 else None

    S = QuotientRing(ring.p, ring.variables, (), ring.base_ring.order.kind)
    pres = PresentedModule(
        S, 1, (0,),
        tuple(FreeVector.from_entries(ring.base_ring, 1, [(0, f)])
              for f in ring.ideal_gens))
    _, betti = minimal_free_resolution(pres, n + 1, budget_steps=ring._budget_steps)
    pd_over_poly = 0
    for j, b in enumerate(betti):
        if b:
            pd_over_poly = j
    depth = n - pd_over_poly
    mu = betti[1] if len(betti) > 1 else 0

    e_threshold = 0
    power = 1
    while power < multiplicity:
        power *= ring.p
        e_threshold += 1

    return RingInvariants(
        num_vars=n,
        dim=dim,
        depth=depth,
        multiplicity=multiplicity,
        length=length,
        hilbert_numerator=numerator,
        ideal_min_gens=mu,
        is_cohen_macaulay=(depth == dim),
        is_complete_intersection=(mu == n - dim),
        e_threshold=e_threshold,
        r_window=max(1, dim),
    )


def ring_length_basis(ring: QuotientRing) -> list[Monomial]:
    """Monomial basis of an artinian R, ascending in the ring order."""
    sm = standard_monomials(ring.ideal_groebner())
    if sm is None:
        raise ValueError("the ring has positive dimension")
    return [m for _, m in sm]
