"""Sectioned instance files and canonical JSON rendering.

An instance file is UTF-8 text with up to three sections:

    [ring] p=2 vars=x,y ideal=x*y; x^2
    [module] generators=2 degrees=0,0 relations=x,0; 0,y
    [criteria] e=1,2 t=1 window=auto mode=auto

Sections may span lines; a '#' starts a comment.  Values run until the
next key= token, so polynomial strings may contain spaces.  Reports are
rendered as JSON with sorted keys so identical inputs produce byte
identical output.
"""

from __future__ import annotations

import json
import math
import re

from .errors import ParseError

_SECTION_RE = re.compile(r"^\[(\w+)\]")
_KEY_SPLIT_RE = re.compile(r"\s+(?=[A-Za-z_][A-Za-z0-9_]*=)")

_FILE_MODES = {"auto": "auto", "b": "force_b", "c": "force_c",
               "d": "force_d", "zero_dim": "zero_dim"}
_MODE_NAMES = {v: k for k, v in _FILE_MODES.items()}

KNOWN_KEYS = {
    "ring": {"p", "vars", "ideal"},
    "module": {"generators", "degrees", "relations"},
    "criteria": {"e", "t", "window", "mode"},
}


def _strip_comments(text: str) -> str:
    lines = []
    for line in text.splitlines():
        idx = line.find("#")
        if idx >= 0:
            line = line[:idx]
        lines.append(line)
    return "\n".join(lines)


def _split_sections(text: str) -> dict[str, str]:
    sections: dict[str, str] = {}
    current: str | None = None
    chunks: dict[str, list[str]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        m = _SECTION_RE.match(line)
        if m:
            current = m.group(1)
            if current in chunks:
                raise ParseError(f"duplicate section [{current}]")
            chunks[current] = [line[m.end():].strip()]
            continue
        if current is None:
            raise ParseError(f"content before the first section header: {line!r}")
        chunks[current].append(line)
    for name, parts in chunks.items():
        sections[name] = " ".join(p for p in parts if p)
    return sections


def _parse_pairs(section: str, body: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    if not body.strip():
        return pairs
    for chunk in _KEY_SPLIT_RE.split(body.strip()):
        if "=" not in chunk:
            raise ParseError(f"expected key=value in section [{section}], got {chunk!r}")
        key, value = chunk.split("=", 1)
        key = key.strip()
        if key not in KNOWN_KEYS[section]:
            raise ParseError(f"unknown key {key!r} in section [{section}]")
        if key in pairs:
            raise ParseError(f"duplicate key {key!r} in section [{section}]")
        pairs[key] = value.strip()
    return pairs


def _int_value(section: str, key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"[{section}] {key} must be an integer, got {value!r}") from None


def _int_list(section: str, key: str, value: str) -> list[int]:
    if not value.strip():
        return []
    return [_int_value(section, key, v.strip()) for v in value.split(",")]


def _str_list(value: str, sep: str) -> list[str]:
    if not value.strip():
        return []
    return [v.strip() for v in value.split(sep) if v.strip()]


def parse_instance_text(text: str) -> dict:
    """Parse an instance file into plain dicts (ring, module, criteria)."""
    sections = _split_sections(_strip_comments(text))
    unknown = set(sections) - {"ring", "module", "criteria"}
    if unknown:
        raise ParseError(f"unknown sections: {sorted(unknown)}")
    if "ring" not in sections:
        raise ParseError("missing required section [ring]")

    ring_pairs = _parse_pairs("ring", sections["ring"])
    for required in ("p", "vars"):
        if required not in ring_pairs:
            raise ParseError(f"[ring] is missing {required}=")
    ring = {
        "p": _int_value("ring", "p", ring_pairs["p"]),
        "vars": _str_list(ring_pairs["vars"], ","),
        "ideal": _str_list(ring_pairs.get("ideal", ""), ";"),
    }
    if not ring["vars"]:
        raise ParseError("[ring] vars must list at least one variable")

    module = None
    if "module" in sections:
        pairs = _parse_pairs("module", sections["module"])
        if "generators" not in pairs:
            raise ParseError("[module] is missing generators=")
        g = _int_value("module", "generators", pairs["generators"])
        degrees = (_int_list("module", "degrees", pairs["degrees"])
                   if "degrees" in pairs else None)
        relations = []
        for column in _str_list(pairs.get("relations", ""), ";"):
            entries = [v.strip() for v in column.split(",")]
            if len(entries) != g:
                raise ParseError(
                    f"[module] relation column {column!r} must have {g} entries")
            relations.append(entries)
        if degrees is not None and len(degrees) != g:
            raise ParseError(f"[module] degrees must list {g} integers")
        module = {"generators": g, "degrees": degrees, "relations": relations}

    criteria = None
    if "criteria" in sections:
        pairs = _parse_pairs("criteria", sections["criteria"])
        window_text = pairs.get("window", "auto")
        window = None if window_text == "auto" else _int_value(
            "criteria", "window", window_text)
        mode_text = pairs.get("mode", "auto")
        if mode_text not in _FILE_MODES:
            raise ParseError(f"[criteria] mode must be one of "
                             f"{sorted(_FILE_MODES)}, got {mode_text!r}")
        criteria = {
            "e": _int_list("criteria", "e", pairs.get("e", "1")) or [1],
            "t": _int_value("criteria", "t", pairs.get("t", "1")),
            "window": window,
            "mode": _FILE_MODES[mode_text],
        }

    return {"ring": ring, "module": module, "criteria": criteria}


def render_instance_text(ring: dict, module: dict | None = None,
                         criteria: dict | None = None) -> str:
    """Render the plain-dict form back into the sectioned file format."""
    lines = []
    ideal = "; ".join(ring.get("ideal", []))
    lines.append(f"[ring] p={ring['p']} vars={','.join(ring['vars'])} ideal={ideal}")
    if module is not None:
        parts = [f"generators={module['generators']}"]
        if module.get("degrees") is not None:
            parts.append("degrees=" + ",".join(str(d) for d in module["degrees"]))
        columns = "; ".join(",".join(col) for col in module.get("relations", []))
        parts.append(f"relations={columns}")
        lines.append("[module] " + " ".join(parts))
    if criteria is not None:
        window = criteria.get("window")
        window_text = "auto" if window is None else str(window)
        mode = _MODE_NAMES.get(criteria.get("mode", "auto"), "auto")
        lines.append(
            f"[criteria] e={','.join(str(e) for e in criteria.get('e', [1]))} "
            f"t={criteria.get('t', 1)} window={window_text} mode={mode}")
    return "\n".join(lines) + "\n"


def encode_extended(value: int | float | None) -> int | str | None:
    """JSON encoding of a value from the naturals extended by infinity."""
    if value is None:
        return None
    if value == math.inf:
        return "infinity"
    return int(value)


def canonical_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
