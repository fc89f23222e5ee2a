"""JSON form of :class:`~uqgh.rep.WeightModule` (``"schema": 1``).

Matrix entries and weights are strings in the scalar grammar accepted by
:func:`uqgh.parser.parse_scalar`, so a dump followed by a load gives back the
same matrices exactly.
"""

from __future__ import annotations

import json

from .parser import parse_scalar
from .rep import GEN_NAMES, WeightModule

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    pass


def module_to_dict(M: WeightModule) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "dim": M.dim,
        "basis_labels": list(M.basis_labels),
        "action": {name: [[str(x) for x in row] for row in M.action[name]] for name in GEN_NAMES},
        "weights": [[str(x) for x in w] for w in M.weights] if M.weights else None,
    }


def module_from_dict(data: dict) -> WeightModule:
    if not isinstance(data, dict):
        raise SchemaError("module JSON must be an object")
    if data.get("schema") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema {data.get('schema')!r}, expected {SCHEMA_VERSION}")
    try:
        action = {name: [[parse_scalar(x) for x in row] for row in m] for name, m in data["action"].items()}
        weights = data.get("weights")
        if weights is not None:
            weights = [[parse_scalar(x) for x in w] for w in weights]
        M = WeightModule(action, data.get("basis_labels"), weights)
    except KeyError as exc:
        raise SchemaError(f"missing field {exc}") from None
    if "dim" in data and data["dim"] != M.dim:
        raise SchemaError(f"dim field {data['dim']} does not match matrices of size {M.dim}")
    return M


def dumps(M: WeightModule, indent: int | None = 2) -> str:
    return json.dumps(module_to_dict(M), indent=indent, ensure_ascii=False)


def loads(text: str) -> WeightModule:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    return module_from_dict(data)


def save(M: WeightModule, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(M))
        fh.write("\n")


def load(path) -> WeightModule:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
