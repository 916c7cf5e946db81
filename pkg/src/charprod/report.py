"""Serialization of tables, decompositions, verdicts and scans to JSON and markdown.

JSON output is canonical (sorted keys, fixed indentation, floats rounded) so
that reports are byte-identical across runs; files are written to a
temporary name and renamed into place.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import numpy as np

from . import __version__
from .characters.modular import to_symmetric
from .characters.table import CharacterTable

SCHEMA_VERSION = 1
FLOAT_DIGITS = 10


def _clean_float(x: float) -> float:
    x = round(float(x), FLOAT_DIGITS)
    return 0.0 if x == 0 else x


def envelope(kind: str, payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "generator": f"charprod {__version__}", "kind": kind, **payload}


def dumps_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.floating):
        return _clean_float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def atomic_write(path, text: str) -> Path:
    """Write ``text`` to ``path`` via a temporary file in the same directory."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


# -- character tables --------------------------------------------------------------


def table_to_dict(table: CharacterTable, group_id: str) -> dict:
    cls = table.classes
    G = table.group
    reps = G.elements[cls.representatives]
    complex_values = table.complex_values
    return envelope("character-table", {
        "group": group_id,
        "order": G.order,
        "degree": G.degree,
        "modulus": table.modulus,
        "root": table.root,
        "exponent": table.exponent,
        "seed": table.seed,
        "classes": [
            {"size": int(cls.sizes[c]), "order": int(cls.rep_orders[c]), "representative": reps[c].tolist()}
            for c in range(cls.k)
        ],
        "degrees": [int(d) for d in table.degrees],
        "sum_of_squares": int((table.degrees.astype(np.int64) ** 2).sum()),
        "values_mod_l": table.values.tolist(),
        "values": [
            [[_clean_float(z.real), _clean_float(z.imag)] for z in row] for row in complex_values
        ],
    })


def _format_complex(z: complex) -> str:
    re, im = _clean_float(z.real), _clean_float(z.imag)
    if abs(im) < 1e-9:
        return f"{re:g}"
    if abs(re) < 1e-9:
        return f"{im:g}i"
    return f"{re:g}{im:+g}i"


def table_markdown(table: CharacterTable, group_id: str) -> str:
    cls = table.classes
    lines = [
        f"# Character table of {group_id}",
        "",
        f"- order: {table.group.order}",
        f"- classes: {cls.k}",
        f"- modulus: {table.modulus} (root {table.root} of order {table.exponent})",
        f"- degrees: {' '.join(str(int(d)) for d in table.degrees)}",
        f"- sum of squared degrees: {int((table.degrees.astype(np.int64) ** 2).sum())}",
        "",
    ]
    if cls.k <= 24:
        header = "| | " + " | ".join(f"{int(cls.rep_orders[c])}/{int(cls.sizes[c])}" for c in range(cls.k)) + " |"
        lines += [header, "|" + "---|" * (cls.k + 1)]
        for i, row in enumerate(table.complex_values):
            lines.append(f"| chi_{i} | " + " | ".join(_format_complex(z) for z in row) + " |")
        lines.append("")
        lines.append("Columns are labelled element order / class size.")
    else:
        lines.append("(table has more than 24 classes; see the JSON file for values)")
    return "\n".join(lines) + "\n"


def residues(values, modulus: int) -> list[int]:
    return [int(v) for v in to_symmetric(values, modulus)]


# -- generic markdown helpers ------------------------------------------------------


def markdown_table(headers: list[str], rows: list[list]) -> str:
    out = ["| " + " | ".join(headers) + " |", "|" + "---|" * len(headers)]
    for r in rows:
        out.append("| " + " | ".join(str(c).replace("|", "/") for c in r) + " |")
    return "\n".join(out)
