"""GroupSpec: JSON construction trees for every group the package builds.

Each node is an object with a ``type`` tag:

    {"type": "named", "name": "SL(2,3)"}
    {"type": "matrix-group", "q": 3, "n": 2, "generators": [[[0, 2], [1, 0]]],
     "action": "vectors" | "nonzero-vectors"}
    {"type": "extraspecial", "p": 3, "n": 1}
    {"type": "semidirect", "normal": <extraspecial>, "complement": <matrix-group or named linear>}
    {"type": "central-product", "factors": [<matrix-group>, <matrix-group>]}
    {"type": "wreath-affine", "p": 3, "m": 1}
    {"type": "subgroup", "of": <spec>, "words": [[[gen, exp], ...], ...]}
    {"type": "case-v", "seed": 20240901}

A top-level document may also carry ``id`` and ``description`` fields.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from ..errors import GroupTooLarge, SpecError, UnknownGroup
from ..perm.group import ENUMERATION_BOUND, PermGroup
from ..perm.permutation import Permutation
from .extraspecial import ExtraspecialGroup, extraspecial
from .matrices import MatrixGroup
from .named import named_group
from .products import semidirect_extraspecial, tensor_product_group, wreath_affine

SPEC_TYPES = (
    "named", "matrix-group", "extraspecial", "semidirect",
    "central-product", "wreath-affine", "subgroup", "case-v",
)


@dataclass(frozen=True)
class GroupSpec:
    tree: dict
    id: str | None = None
    description: str = ""
    meta: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, doc: dict) -> "GroupSpec":
        if not isinstance(doc, dict):
            raise SpecError("a spec must be a JSON object")
        doc = dict(doc)
        ident = doc.pop("id", None)
        description = doc.pop("description", "")
        meta = doc.pop("meta", {})
        validate(doc)
        return cls(doc, ident, description, meta)

    @classmethod
    def loads(cls, text: str) -> "GroupSpec":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON: {exc}") from exc

    @classmethod
    def load(cls, path) -> "GroupSpec":
        return cls.loads(Path(path).read_text())

    def to_dict(self) -> dict:
        doc = {}
        if self.id is not None:
            doc["id"] = self.id
        if self.description:
            doc["description"] = self.description
        if self.meta:
            doc["meta"] = self.meta
        doc.update(self.tree)
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def build(self, bound: int = ENUMERATION_BOUND) -> PermGroup:
        G = build(self.tree, bound)
        if G.order > bound:
            raise GroupTooLarge(f"group of order {G.order} exceeds the bound {bound}")
        if self.id and not G.name:
            G.name = self.id
        return G


def _require(node: dict, *keys: str) -> None:
    missing = [k for k in keys if k not in node]
    if missing:
        raise SpecError(f"{node.get('type')!r} node is missing {', '.join(missing)}")


def validate(node) -> None:
    """Check that ``node`` is a well-formed construction tree."""
    if not isinstance(node, dict) or "type" not in node:
        raise SpecError("every node needs a 'type' field")
    kind = node["type"]
    if kind not in SPEC_TYPES:
        raise SpecError(f"unknown spec type {kind!r}")
    if kind == "named":
        _require(node, "name")
    elif kind == "matrix-group":
        _require(node, "q", "generators")
        if node.get("action", "vectors") not in ("vectors", "nonzero-vectors"):
            raise SpecError(f"unknown action {node['action']!r}")
        gens = np.asarray(node["generators"])
        if gens.ndim != 3 or gens.shape[1] != gens.shape[2]:
            raise SpecError("generators must be a list of square matrices")
        if "n" in node and gens.shape[1] != node["n"]:
            raise SpecError("generator size does not match n")
    elif kind == "extraspecial":
        _require(node, "p", "n")
    elif kind == "semidirect":
        _require(node, "normal", "complement")
        validate(node["normal"])
        validate(node["complement"])
        if node["normal"]["type"] != "extraspecial":
            raise SpecError("semidirect products need an extraspecial normal subgroup")
    elif kind == "central-product":
        _require(node, "factors")
        for f in node["factors"]:
            validate(f)
    elif kind == "wreath-affine":
        _require(node, "p")
    elif kind == "subgroup":
        _require(node, "of", "words")
        validate(node["of"])


def _build_matrix(node: dict, bound: int) -> MatrixGroup:
    if node["type"] == "matrix-group":
        return MatrixGroup(
            int(node["q"]), node["generators"], node.get("action", "vectors"),
            name=node.get("name"), enumeration_bound=bound,
        )
    G = build(node, bound)
    if not isinstance(G, MatrixGroup):
        raise SpecError(f"{node['type']!r} node does not describe a matrix group")
    return G


def _build_extraspecial(node: dict, bound: int) -> ExtraspecialGroup:
    return extraspecial(int(node["p"]), int(node["n"]), enumeration_bound=bound)


def _evaluate_word(G: PermGroup, word) -> np.ndarray:
    result = Permutation.identity(G.degree)
    gens = G.generators
    for gen, exp in word:
        if not 0 <= gen < len(gens):
            raise SpecError(f"generator index {gen} out of range")
        result = result * gens[gen] ** int(exp)
    return result.array


def build(node: dict, bound: int = ENUMERATION_BOUND) -> PermGroup:
    """Build the permutation group described by a construction tree."""
    validate(node)
    kind = node["type"]
    try:
        if kind == "named":
            G = named_group(node["name"])
            G.enumeration_bound = bound
            return G
        if kind == "matrix-group":
            return _build_matrix(node, bound)
        if kind == "extraspecial":
            return _build_extraspecial(node, bound).carrier
        if kind == "semidirect":
            E = _build_extraspecial(node["normal"], bound)
            H = _build_matrix(node["complement"], bound)
            return semidirect_extraspecial(E, H, name=node.get("name"), enumeration_bound=bound)
        if kind == "central-product":
            A, B = (_build_matrix(f, bound) for f in node["factors"])
            return tensor_product_group(A, B, name=node.get("name"))
        if kind == "wreath-affine":
            return wreath_affine(int(node["p"]), int(node.get("m", 1)), bound=bound)
        if kind == "subgroup":
            parent = build(node["of"], bound)
            gens = [_evaluate_word(parent, w) for w in node["words"]]
            return parent.subgroup(gens, name=node.get("name"))
        if kind == "case-v":
            from .case_v import DEFAULT_SEED, case_v_group

            return case_v_group(seed=int(node.get("seed", DEFAULT_SEED)))
    except UnknownGroup as exc:
        raise SpecError(f"unknown group name {exc}") from exc
    raise SpecError(f"unhandled spec type {kind!r}")


def shipped_specs() -> dict[str, GroupSpec]:
    """The spec files bundled with the package, keyed by file stem."""
    folder = resources.files("charprod") / "data" / "specs"
    out = {}
    for entry in sorted(folder.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            out[entry.name[:-5]] = GroupSpec.loads(entry.read_text())
    return out


def shipped_spec(name: str) -> GroupSpec:
    specs = shipped_specs()
    if name not in specs:
        raise SpecError(f"no shipped spec named {name!r}")
    return specs[name]
