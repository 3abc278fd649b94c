"""Decision procedures combining the vanishing criteria.

The negative direction is unconditional: a single nonvanishing Tor cell
above the top homology over any quotient ring forces infinite flat
dimension.  Positive certificates need ring hypotheses: one vanishing cell
over a complete intersection, or a full window of max(1, dim) consecutive
vanishing cells at an exponent with p^e at least the multiplicity over a
Cohen-Macaulay ring.  Over other rings a finite run can only report
evidence: vanishing windows at every tested exponent would certify
finiteness only if they persisted for infinitely many exponents.

Over an artinian ring a separate route decides injectivity from a single
Ext cell at an exponent with p^e at least the length, cross-checked
against the residue-field Ext test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ResourceLimitExceeded
from .frobenius import frobenius_twist, pushforward_presentation, sup_homology
from .resolutions import (
    FreeComplex,
    PresentedModule,
    ext_module,
    homology_at,
    minimal_free_resolution,
    projective_dimension_oracle,
)
from .rings import QuotientRing

OUTCOME_FINITE = "FiniteFlatDim"
OUTCOME_INFINITE = "InfiniteFlatDim"
OUTCOME_INCONCLUSIVE = "Inconclusive"

TAG_NEGATIVE = "PS-direction"
TAG_CM = "Thm1.1(c)/Thm3.1"
TAG_CI = "Thm1.1(d)/CI"
TAG_ZERO_DIM = "Prop2.8"
TAG_EVIDENCE = "Thm1.1(b)-evidence"

MODES = ("auto", "force_b", "force_c", "force_d", "zero_dim")


@dataclass(frozen=True)
class CriterionConfig:
    """Which cells to compute and which certificates may be claimed."""

    e_list: tuple[int, ...] = (1,)
    t: int = 1
    window_override: int | None = None
    mode: str = "auto"

    def __post_init__(self):
        if not self.e_list:
            raise ValueError("e_list must be nonempty")
        exponents = tuple(sorted(int(e) for e in self.e_list))
        if exponents[0] < 1:
            raise ValueError("Frobenius exponents must be positive")
        object.__setattr__(self, "e_list", exponents)
        if self.window_override is not None and self.window_override < 1:
            raise ValueError("window_override must be at least 1")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision run, with the facts that justify it."""

    outcome: str
    theorem_used: str | None
    witnesses: tuple[tuple[int, int], ...]
    oracle_pd: int | float | None
    notes: tuple[str, ...] = ()
    preconditions: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        if self.oracle_pd is None:
            oracle: int | str | None = None
        elif self.oracle_pd == math.inf:
            oracle = "infinity"
        else:
            oracle = int(self.oracle_pd)
        return {
            "outcome": self.outcome,
            "theorem_used": self.theorem_used,
            "witnesses": [list(w) for w in self.witnesses],
            "oracle_pd": oracle,
            "notes": list(self.notes),
            "preconditions": dict(self.preconditions),
        }


def _attach_oracle(module: PresentedModule | None, attach: bool,
                   budget_steps: int | None, notes: list[str]) -> int | float | None:
    if module is None or not attach:
        return None
    try:
        return projective_dimension_oracle(module, budget_steps=budget_steps)
    except ResourceLimitExceeded as exc:
        notes.append(f"oracle skipped: {exc}")
        return None


def decide_flat_dimension(ring: QuotientRing,
                          target: PresentedModule | FreeComplex,
                          config: CriterionConfig,
                          budget_steps: int | None = None,
                          attach_oracle: bool = True) -> Verdict:
    """Decide finiteness of flat dimension from Frobenius Tor cells.

    Routing: any nonvanishing cell gives InfiniteFlatDim; with everything
    vanishing, a complete intersection certifies finiteness from one cell
    and a Cohen-Macaulay ring from a full window at an exponent past the
    multiplicity threshold; otherwise the run is inconclusive, with an
    evidence tag when every window vanished.  A resource limit always
    surfaces as Inconclusive with a note, never as a wrong answer.
    """
    inv = ring.invariants
    is_module = isinstance(target, PresentedModule)
    if config.mode == "zero_dim":
        if not is_module:
            raise ValueError("injectivity decisions require a module input")
        return decide_injectivity_zero_dim(ring, target, max(config.e_list),
                                           config.t, budget_steps=budget_steps)

    notes: list[str] = []
    if is_module:
        if target.ring != ring:
            raise ValueError("module and ring do not match")
        if target.is_zero(budget_steps):
            raise ValueError("the zero module is excluded; present a nonzero module")
        sup_h: int | None = 0
        if config.t < 1:
            raise ValueError("t must be at least 1 for module input")
    else:
        if target.ring != ring:
            raise ValueError("complex and ring do not match")
        sup_h = sup_homology(target, budget_steps=budget_steps)
        if sup_h is not None and config.t <= sup_h:
            raise ValueError(
                f"t = {config.t} must exceed the top nonvanishing homology index {sup_h}")

    window = (config.window_override if config.window_override is not None
              else inv.r_window)
    preconditions = {
        "is_cohen_macaulay": inv.is_cohen_macaulay,
        "is_complete_intersection": inv.is_complete_intersection,
        "e_threshold": inv.e_threshold,
        "r_window": inv.r_window,
        "dim": inv.dim,
        "t": config.t,
        "window": window,
        "sup_homology": sup_h,
        "e_list": list(config.e_list),
        "mode": config.mode,
    }

    cells: dict[tuple[int, int], bool] = {}
    try:
        if is_module:
            resolution, _ = minimal_free_resolution(target, config.t + window,
                                                    budget_steps=budget_steps)
            base_complex = resolution
        else:
            base_complex = target
        for e in config.e_list:
            twisted = frobenius_twist(base_complex, e)
            for i in range(config.t, config.t + window):
                vanishes, _ = homology_at(twisted, i, want_dim=False,
                                          budget_steps=budget_steps)
                cells[(i, e)] = vanishes
    except ResourceLimitExceeded as exc:
        return Verdict(OUTCOME_INCONCLUSIVE, None, (), None,
                       (f"resource limit reached: {exc}",), preconditions)

    oracle = _attach_oracle(target if is_module else None, attach_oracle,
                            budget_steps, notes)

    for e in config.e_list:
        for i in range(config.t, config.t + window):
            if not cells[(i, e)]:
                notes.append(
                    f"Tor at (i={i}, e={e}) is nonzero above the top homology, "
                    "which is incompatible with finite flat dimension")
                return Verdict(OUTCOME_INFINITE, TAG_NEGATIVE, ((i, e),), oracle,
                               tuple(notes), preconditions)

    # every computed cell vanishes from here on
    allow_ci = config.mode in ("auto", "force_d")
    allow_cm = config.mode in ("auto", "force_c")

    if allow_ci:
        if inv.is_complete_intersection:
            witness = (config.t, config.e_list[0])
            notes.append("one vanishing cell above the top homology suffices "
                         "over a complete intersection")
            return Verdict(OUTCOME_FINITE, TAG_CI, (witness,), oracle,
                           tuple(notes), preconditions)
        if config.mode == "force_d":
            notes.append("the ring is not a complete intersection, so the "
                         "requested single-cell criterion does not apply")

    if allow_cm:
        if inv.is_cohen_macaulay:
            eligible = [e for e in config.e_list if e >= inv.e_threshold]
            if eligible and window >= inv.r_window:
                e0 = eligible[0]
                witnesses = tuple((i, e0) for i in range(config.t,
                                                         config.t + inv.r_window))
                notes.append(
                    f"a window of {inv.r_window} consecutive vanishing cells at "
                    f"e = {e0} with p^e at least the multiplicity {inv.multiplicity} "
                    "certifies finite flat dimension over a Cohen-Macaulay ring")
                return Verdict(OUTCOME_FINITE, TAG_CM, witnesses, oracle,
                               tuple(notes), preconditions)
            if not eligible:
                notes.append(
                    f"all tested exponents fall below the multiplicity threshold "
                    f"e >= {inv.e_threshold} (p^e >= {inv.multiplicity}); the "
                    "Cohen-Macaulay window criterion cannot be applied")
            elif window < inv.r_window:
                notes.append(
                    f"the window of {window} cells is narrower than the required "
                    f"max(1, dim) = {inv.r_window}")
        elif config.mode == "force_c":
            notes.append("the ring is not Cohen-Macaulay, so the requested "
                         "window criterion does not apply")

    if window >= inv.r_window:
        witnesses = tuple(sorted(cells))
        notes.append(
            "every computed window vanishes; if such vanishing persisted for "
            "infinitely many exponents the flat dimension would be finite, but "
            "a finite run cannot certify that")
        return Verdict(OUTCOME_INCONCLUSIVE, TAG_EVIDENCE, witnesses, oracle,
                       tuple(notes), preconditions)
    notes.append(
        f"the vanishing evidence spans {window} consecutive cells, fewer than "
        f"max(1, dim) = {inv.r_window}, so no persistence evidence is claimed")
    return Verdict(OUTCOME_INCONCLUSIVE, None, (), oracle, tuple(notes),
                   preconditions)


def decide_injectivity_zero_dim(ring: QuotientRing, module: PresentedModule,
                                e: int, i: int,
                                budget_steps: int | None = None) -> Verdict:
    """Decide injectivity of a module over an artinian ring from one Ext cell.

    Requires p^e to be at least the ring's length; below the threshold the
    verdict is a precondition failure.  Over an artinian ring finite
    injective dimension forces injectivity, so a nonvanishing cell decides
    the negative direction.  The outcome is cross-checked against the
    vanishing of Ext^1 of the residue field into the module.
    """
    inv = ring.invariants
    if inv.dim != 0:
        raise ValueError("the zero-dimensional criterion requires an artinian ring")
    if module.ring != ring:
        raise ValueError("module and ring do not match")
    if module.is_zero(budget_steps):
        raise ValueError("the zero module is excluded; present a nonzero module")
    if e < 1 or i < 1:
        raise ValueError("both e and i must be positive")
    lam = inv.length
    power = ring.p ** e
    preconditions = {
        "dim": 0,
        "length": lam,
        "e": e,
        "i": i,
        "p_power": power,
        "e_threshold": inv.e_threshold,
        "mode": "zero_dim",
    }
    if power < lam:
        return Verdict(
            OUTCOME_INCONCLUSIVE, None, (), None,
            (f"p^e = {power} is below the ring length lambda = {lam}; the "
             f"criterion requires e >= {inv.e_threshold}",),
            preconditions)
    try:
        push = pushforward_presentation(ring, e, budget_steps=budget_steps)
        vanishes, _ = ext_module(push.module, module, i, want_dim=False,
                                 budget_steps=budget_steps)
        residue = PresentedModule.residue_field(ring)
        baer_vanishes, _ = ext_module(residue, module, 1, want_dim=False,
                                      budget_steps=budget_steps)
    except ResourceLimitExceeded as exc:
        return Verdict(OUTCOME_INCONCLUSIVE, None, (), None,
                       (f"resource limit reached: {exc}",), preconditions)
    if vanishes != baer_vanishes:
        raise AssertionError(
            "the Frobenius Ext cell and the residue-field Ext test disagree "
            f"on injectivity (cell vanishes: {vanishes}, Ext^1(k, M) vanishes: "
            f"{baer_vanishes})")
    if vanishes:
        return Verdict(
            OUTCOME_FINITE, TAG_ZERO_DIM, ((i, e),), None,
            ("the module is injective, so its injective dimension is zero",
             "residue-field cross-check agrees: Ext^1(k, M) = 0"),
            preconditions)
    return Verdict(
        OUTCOME_INFINITE, TAG_ZERO_DIM, ((i, e),), None,
        ("the tested Ext cell is nonzero, so the module is not injective; "
         "over an artinian ring finite injective dimension forces injectivity",
         "residue-field cross-check agrees: Ext^1(k, M) != 0"),
        preconditions)
