"""Report payloads: plain dicts rendered either as JSON or as tab-delimited text.

Payload values are restricted to str, int, bool, lists and dicts so that the
JSON form round-trips byte for byte. Rationals are stored as ``"p/q"`` strings;
the only floats are numeric root data.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .arrangement import Arrangement
from .exact_math import Polynomial, format_rational
from .regions import Region


def rational(q) -> str:
    return format_rational(Fraction(q))


def polynomial_payload(p: Polynomial) -> dict:
    return {"coefficients": p.coefficient_strings(), "text": p.to_text()}


def arrangement_summary(A: Arrangement, name: str = "") -> dict:
    out = {"d": A.dim, "n": len(A), "rank": A.rank}
    if name:
        out["name"] = name
    return out


def region_row(k: int, r: Region) -> dict:
    return {
        "index": k,
        "signs": r.sign_string(),
        "sample": [rational(x) for x in r.sample],
        "bounded": r.relatively_bounded,
    }


def to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    if isinstance(v, dict):
        return " ".join(f"{k}={_cell(x)}" for k, x in sorted(v.items()))
    return str(v)


def _is_table(v: Any) -> bool:
    return isinstance(v, list) and bool(v) and all(isinstance(x, dict) for x in v)


def _is_polynomial(v: Any) -> bool:
    return isinstance(v, dict) and set(v) == {"coefficients", "text"}


def _flatten(prefix: str, v: Any, lines: list[str], tables: list) -> None:
    if _is_table(v):
        tables.append((prefix, v))
    elif _is_polynomial(v):
        lines.append(f"{prefix}\t{v['text']}")
    elif isinstance(v, dict):
        for k in sorted(v):
            _flatten(f"{prefix}.{k}", v[k], lines, tables)
    else:
        lines.append(f"{prefix}\t{_cell(v)}")


def to_text(payload: dict) -> str:
    """Scalars as ``key<TAB>value`` lines (nested keys dotted), then each table with a header row."""
    lines: list[str] = []
    tables: list = []
    for key in sorted(payload):
        _flatten(key, payload[key], lines, tables)
    for key, rows in tables:
        cols = list(rows[0])
        lines.append("")
        lines.append(f"# {key}")
        lines.append("\t".join(cols))
        lines.extend("\t".join(_cell(r.get(c, "")) for c in cols) for r in rows)
    return "\n".join(lines)


def render(payload: dict, as_json: bool) -> str:
    return to_json(payload) if as_json else to_text(payload)
