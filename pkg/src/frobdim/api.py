"""Application layer shared by the CLI and the HTTP service.

Pydantic models validate wire-level input; builders turn them into core
objects; report functions return JSON-ready dicts with sorted, stable
content so repeated runs are byte identical after canonical rendering.
"""

from __future__ import annotations

import math
import pathlib

from pydantic import BaseModel, Field, field_validator

from .criteria import (MODES, CriterionConfig, Verdict, decide_flat_dimension)
from .errors import ResourceLimitExceeded
from .frobenius import ext_frobenius, tor_frobenius
from .groebner import DEFAULT_STEP_BUDGET
from .iofmt import encode_extended, parse_instance_text
from .polynomials import FreeVector
from .resolutions import (PresentedModule, minimal_free_resolution,
                          projective_dimension_oracle)
from .rings import QuotientRing

SCHEMA_VERSION = 1


class RingSpec(BaseModel):
    p: int = Field(ge=2)
    vars: list[str] = Field(min_length=1)
    ideal: list[str] = Field(default_factory=list)


class ModuleSpec(BaseModel):
    generators: int = Field(ge=1)
    degrees: list[int] | None = None
    relations: list[list[str]] = Field(default_factory=list)


class CriteriaSpec(BaseModel):
    e: list[int] = Field(default_factory=lambda: [1])
    t: int = 1
    window: int | None = None
    mode: str = "auto"

    @field_validator("mode")
    @classmethod
    def _known_mode(cls, value: str) -> str:
        if value not in MODES:
            raise ValueError(f"mode must be one of {sorted(MODES)}")
        return value


class InstanceSpec(BaseModel):
    ring: RingSpec
    module: ModuleSpec | None = None
    criteria: CriteriaSpec = Field(default_factory=CriteriaSpec)


def instance_from_text(text: str) -> InstanceSpec:
    parsed = parse_instance_text(text)
    payload: dict = {"ring": parsed["ring"]}
    if parsed["module"] is not None:
        payload["module"] = parsed["module"]
    if parsed["criteria"] is not None:
        payload["criteria"] = parsed["criteria"]
    return InstanceSpec.model_validate(payload)


def instance_from_file(path) -> InstanceSpec:
    return instance_from_text(pathlib.Path(path).read_text(encoding="utf-8"))


def build_ring(spec: RingSpec, budget_steps: int | None = None) -> QuotientRing:
    return QuotientRing(spec.p, tuple(spec.vars), tuple(spec.ideal),
                        budget_steps=budget_steps or DEFAULT_STEP_BUDGET)


def build_module(ring: QuotientRing, spec: ModuleSpec) -> PresentedModule:
    base = ring.base_ring
    relations = []
    for column in spec.relations:
        if len(column) != spec.generators:
            raise ValueError(
                f"relation column needs {spec.generators} entries, "
                f"got {len(column)}")
        entries = []
        for pos, text in enumerate(column):
            poly = base.poly(text)
            if not poly.is_zero():
                entries.append((pos, poly))
        relations.append(
            FreeVector.from_entries(base, spec.generators, entries))
    degrees = tuple(spec.degrees) if spec.degrees is not None else None
    return PresentedModule(ring, spec.generators, degrees, tuple(relations))


def build_config(spec: CriteriaSpec) -> CriterionConfig:
    return CriterionConfig(e_list=tuple(spec.e), t=spec.t,
                           window_override=spec.window, mode=spec.mode)


def _ring_block(spec: RingSpec, ring: QuotientRing) -> dict:
    block = {"p": spec.p, "vars": list(spec.vars),
             "ideal": [str(f) for f in ring.ideal]}
    block.update(ring.invariants.as_dict())
    return block


def invariants_report(spec: RingSpec,
                      budget_steps: int | None = None) -> dict:
    ring = build_ring(spec, budget_steps)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "invariants",
        "ring": _ring_block(spec, ring),
    }


def _require_module(instance: InstanceSpec) -> ModuleSpec:
    if instance.module is None:
        raise ValueError("this command needs a [module] section")
    return instance.module


def _table_report(instance: InstanceSpec, kind: str,
                  budget_steps: int | None = None) -> dict:
    ring = build_ring(instance.ring, budget_steps)
    module = build_module(ring, _require_module(instance))
    config = build_config(instance.criteria)
    window = (config.window_override if config.window_override is not None
              else ring.invariants.r_window)
    compute = tor_frobenius if kind == "tor-table" else ext_frobenius
    table = None
    for e in config.e_list:
        part = compute(module, config.t, window, e,
                       with_dims=True, budget_steps=budget_steps)
        table = part if table is None else table.merged_with(part)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "ring": _ring_block(instance.ring, ring),
        "t": config.t,
        "window": window,
        "e": list(config.e_list),
        "cells": table.as_dict(),
    }


def tor_table_report(instance: InstanceSpec,
                     budget_steps: int | None = None) -> dict:
    return _table_report(instance, "tor-table", budget_steps)


def ext_table_report(instance: InstanceSpec,
                     budget_steps: int | None = None) -> dict:
    return _table_report(instance, "ext-table", budget_steps)


def _verdict_block(verdict: Verdict) -> dict:
    return verdict.as_dict()


def decide_report(instance: InstanceSpec, budget_steps: int | None = None,
                  attach_oracle: bool = True) -> dict:
    ring = build_ring(instance.ring, budget_steps)
    module = build_module(ring, _require_module(instance))
    config = build_config(instance.criteria)
    verdict = decide_flat_dimension(ring, module, config,
                                    budget_steps=budget_steps,
                                    attach_oracle=attach_oracle)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "decide",
        "ring": _ring_block(instance.ring, ring),
        "verdict": _verdict_block(verdict),
    }


def oracle_report(instance: InstanceSpec,
                  budget_steps: int | None = None) -> dict:
    ring = build_ring(instance.ring, budget_steps)
    module = build_module(ring, _require_module(instance))
    pd = projective_dimension_oracle(module, budget_steps=budget_steps)
    bound = ring.invariants.depth + 1
    steps = bound if pd == math.inf else int(pd)
    _, betti = minimal_free_resolution(module, steps,
                                       budget_steps=budget_steps)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "oracle",
        "ring": _ring_block(instance.ring, ring),
        "projective_dimension": encode_extended(pd),
        "betti": list(betti),
    }


def _entry_consistent(verdict_outcome: str, mode: str,
                      pd: int | float | None) -> tuple[bool, str]:
    """Check a decide verdict against the exact oracle.

    Injectivity decisions (mode zero_dim) are about the dual invariant,
    so the projective oracle does not constrain them.
    """
    if mode == "zero_dim" or pd is None:
        return True, "not-checked"
    if verdict_outcome == "FiniteFlatDim":
        return pd != math.inf, "finite-vs-oracle"
    if verdict_outcome == "InfiniteFlatDim":
        return pd == math.inf, "infinite-vs-oracle"
    return True, "inconclusive"


def verify_corpus_report(directory,
                         budget_steps: int | None = None) -> dict:
    path = pathlib.Path(directory)
    if not path.is_dir():
        raise ValueError(f"corpus directory not found: {directory}")
    # an empty directory is a valid, vacuously consistent corpus
    files = sorted(p for p in path.iterdir() if p.suffix == ".txt")

    entries = []
    violations = []
    resource_limited = []
    for file in files:
        instance = instance_from_file(file)
        ring = build_ring(instance.ring, budget_steps)
        module = build_module(ring, _require_module(instance))
        config = build_config(instance.criteria)
        entry: dict = {"file": file.name, "mode": config.mode}
        try:
            verdict = decide_flat_dimension(ring, module, config,
                                            budget_steps=budget_steps,
                                            attach_oracle=False)
            pd = projective_dimension_oracle(module, budget_steps=budget_steps)
        except ResourceLimitExceeded as exc:
            entry["status"] = "resource-limit"
            entry["detail"] = str(exc)
            resource_limited.append(file.name)
            entries.append(entry)
            continue
        ok, rule = _entry_consistent(verdict.outcome, config.mode, pd)
        entry.update({
            "outcome": verdict.outcome,
            "theorem_used": verdict.theorem_used,
            "oracle_projective_dimension": encode_extended(pd),
            "consistency_rule": rule,
            "status": "ok" if ok else "violation",
        })
        if not ok:
            violations.append(file.name)
        entries.append(entry)

    if violations:
        status = "violation"
    elif resource_limited:
        status = "resource-limit"
    else:
        status = "ok"
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "verify-corpus",
        "directory": str(directory),
        "count": len(files),
        "entries": entries,
        "violations": violations,
        "resource_limited": resource_limited,
        "status": status,
    }
