"""JSON workspace documents.

A workspace document looks like::

    {
      "universe": ["h1", "h2"],
      "parameters": ["I", "II"],
      "sets": {"f": {"central": ["I"], "map": {"I": ["h1"]}}},
      "systems": {"jury": {"members": ["f"], "target": ["I"]}}
    }

Map entries that are left out mean the empty set.  Unknown keys anywhere
are rejected.  :func:`serialize_workspace` emits a canonical form: names
sorted, map entries in parameter order with empty images dropped, object
lists in universe order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .algebra import CentralSoftSet, make_css
from .context import Context, ParamSet
from .decision import EvaluationSystem, make_system
from .errors import DocumentSyntaxError, DuplicateName, UnknownName

_TOP_KEYS = {"universe", "parameters", "sets", "systems"}
_SET_KEYS = {"central", "map"}
_SYSTEM_KEYS = {"members", "target"}


@dataclass(frozen=True)
class SystemRef:
    """An evaluation system stored by member names."""

    members: tuple[str, ...]
    target: ParamSet


@dataclass
class Workspace:
    context: Context
    sets: dict[str, CentralSoftSet] = field(default_factory=dict)
    systems: dict[str, SystemRef] = field(default_factory=dict)

    def get_set(self, name: str) -> CentralSoftSet:
        try:
            return self.sets[name]
        except KeyError:
            raise UnknownName(f"no set named {name!r}") from None

    def get_system(self, name: str) -> EvaluationSystem:
        try:
            ref = self.systems[name]
        except KeyError:
            raise UnknownName(f"no system named {name!r}") from None
        return make_system([self.get_set(m) for m in ref.members], ref.target)


def _no_duplicates(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for key, value in pairs:
        if key in out:
            raise DuplicateName(f"duplicate key {key!r}")
        out[key] = value
    return out


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise DocumentSyntaxError(message)


def _str_list(value: Any, where: str) -> list[str]:
    _expect(
        isinstance(value, list) and all(isinstance(v, str) for v in value),
        f"{where} must be a list of strings",
    )
    return value


def _check_keys(obj: Any, allowed: set[str], required: set[str], where: str) -> None:
    _expect(isinstance(obj, dict), f"{where} must be an object")
    unknown = set(obj) - allowed
    _expect(not unknown, f"unknown keys in {where}: {sorted(unknown)}")
    missing = required - set(obj)
    _expect(not missing, f"missing keys in {where}: {sorted(missing)}")


def css_from_doc(context: Context, doc: Any, where: str = "set") -> CentralSoftSet:
    _check_keys(doc, _SET_KEYS, {"central"}, where)
    central = _str_list(doc["central"], f"{where}.central")
    mapping = doc.get("map", {})
    _expect(isinstance(mapping, dict), f"{where}.map must be an object")
    assignment = {
        param: _str_list(objs, f"{where}.map[{param!r}]") for param, objs in mapping.items()
    }
    return make_css(context, central, assignment)


def css_to_doc(a: CentralSoftSet) -> dict[str, Any]:
    ctx = a.context
    return {
        "central": list(ctx.params(a.central)),
        "map": {p: list(ctx.objects(img)) for p, img in zip(ctx.parameters, a.images) if img},
    }


def parse_workspace(document: bytes | str) -> Workspace:
    try:
        doc = json.loads(document, object_pairs_hook=_no_duplicates)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise DocumentSyntaxError(f"not valid JSON: {exc}") from None
    _check_keys(doc, _TOP_KEYS, {"universe", "parameters"}, "document")
    context = Context(
        _str_list(doc["universe"], "universe"), _str_list(doc["parameters"], "parameters")
    )
    ws = Workspace(context)
    sets = doc.get("sets", {})
    _expect(isinstance(sets, dict), "sets must be an object")
    for name, body in sets.items():
        ws.sets[name] = css_from_doc(context, body, f"sets[{name!r}]")
    systems = doc.get("systems", {})
    _expect(isinstance(systems, dict), "systems must be an object")
    for name, body in systems.items():
        where = f"systems[{name!r}]"
        _check_keys(body, _SYSTEM_KEYS, _SYSTEM_KEYS, where)
        members = tuple(_str_list(body["members"], f"{where}.members"))
        target_names = _str_list(body["target"], f"{where}.target")
        ref = SystemRef(members, context.param_mask(target_names))
        ws.systems[name] = ref
        # validates membership, contexts and coverage
        ws.get_system(name)
    return ws


def workspace_to_doc(ws: Workspace) -> dict[str, Any]:
    ctx = ws.context
    doc: dict[str, Any] = {
        "universe": list(ctx.universe),
        "parameters": list(ctx.parameters),
        "sets": {name: css_to_doc(ws.sets[name]) for name in sorted(ws.sets)},
    }
    if ws.systems:
        doc["systems"] = {
            name: {
                "members": list(ws.systems[name].members),
                "target": list(ctx.params(ws.systems[name].target)),
            }
            for name in sorted(ws.systems)
        }
    return doc


def _emit(value: Any, indent: int) -> str:
    # objects one key per line; lists of scalars stay on one line
    if isinstance(value, dict) and value:
        pad = "  " * (indent + 1)
        items = [
            f"{pad}{json.dumps(k, ensure_ascii=False)}: {_emit(v, indent + 1)}"
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        pad = "  " * (indent + 1)
        items = [pad + _emit(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(value, ensure_ascii=False)


def dumps(doc: Any) -> str:
    return _emit(doc, 0) + "\n"


def serialize_workspace(ws: Workspace) -> bytes:
    return dumps(workspace_to_doc(ws)).encode("utf-8")
