"""Device-catalog JSON parsing: names, functions, status, endpoints."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

CATALOG_SCHEMA_VERSION = 1

_KNOWN_DEVICE_KEYS = {"name", "category", "functions", "status", "address"}
_KNOWN_FUNCTION_KEYS = {"id", "display", "args", "presets"}


class CatalogSchemaError(ValueError):
    """Schema violation annotated with the JSON paths of every offender."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


@dataclass(frozen=True)
class ArgSpec:
    name: str
    type: str = "str"  # int | float | str


@dataclass(frozen=True)
class Preset:
    label: str
    args: tuple[int | float | str, ...]


@dataclass(frozen=True)
class DeviceFunction:
    id: str
    display: str
    args: tuple[ArgSpec, ...] = ()
    presets: tuple[Preset, ...] = ()


@dataclass
class DeviceEntry:
    name: str
    functions: list[DeviceFunction]
    status: dict[str, str] = field(default_factory=dict)
    address: str = ""
    category: str = "other"
    extras: dict = field(default_factory=dict)


@dataclass
class DeviceCatalog:
    entries: list[DeviceEntry]
    extras: dict = field(default_factory=dict)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def get(self, name: str) -> DeviceEntry | None:
        for e in self.entries:
            if e.name == name:
                return e
        return None


def _parse_function(raw, path: str, problems: list[str]) -> DeviceFunction | None:
    if isinstance(raw, str):
        if not raw:
            problems.append(f"{path}: empty function name")
            return None
        return DeviceFunction(id=raw, display=raw)
    if not isinstance(raw, dict):
        problems.append(f"{path}: function must be a string or object")
        return None
    fid = raw.get("id")
    if not isinstance(fid, str) or not fid:
        problems.append(f"{path}.id: missing or empty")
        return None
    display = raw.get("display", fid)
    args = []
    for k, a in enumerate(raw.get("args", []) or []):
        if isinstance(a, str):
            args.append(ArgSpec(name=a))
        elif isinstance(a, dict) and isinstance(a.get("name"), str):
            args.append(ArgSpec(name=a["name"], type=a.get("type", "str")))
        else:
            problems.append(f"{path}.args[{k}]: expected string or {{name, type}}")
    presets = []
    for k, p in enumerate(raw.get("presets", []) or []):
        if not isinstance(p, dict) or "args" not in p:
            problems.append(f"{path}.presets[{k}]: expected {{label, args}}")
            continue
        presets.append(
            Preset(label=str(p.get("label", fid)), args=tuple(p["args"]))
        )
    return DeviceFunction(
        id=fid, display=str(display), args=tuple(args), presets=tuple(presets)
    )


def parse_device_catalog(doc: str | dict | list) -> DeviceCatalog:
    """Parse catalog JSON; unknown fields ride along as ``extras``.

    Either a full document or a bare device array is accepted. Rejects
    malformed JSON, entries without a name, and duplicate names, collecting
    every problem with its JSON path.
    """
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise CatalogSchemaError([f"$: malformed JSON ({exc.msg} at char {exc.pos})"])
    if isinstance(doc, list):
        doc = {"devices": doc}
    if not isinstance(doc, dict):
        raise CatalogSchemaError(["$: expected an object or array"])

    devices = doc.get("devices")
    if devices is None:
        raise CatalogSchemaError(["$.devices: missing"])
    if not isinstance(devices, list):
        raise CatalogSchemaError(["$.devices: expected an array"])

    problems: list[str] = []
    entries: list[DeviceEntry] = []
    seen: dict[str, int] = {}
    for i, raw in enumerate(devices):
        path = f"$.devices[{i}]"
        if not isinstance(raw, dict):
            problems.append(f"{path}: expected an object")
            continue
        name = raw.get("name")
        if not isinstance(name, str) or not name:
            problems.append(f"{path}.name: missing or empty")
            continue
        if name in seen:
            problems.append(f"{path}.name: duplicate of $.devices[{seen[name]}] ({name!r})")
            continue
        seen[name] = i
        functions = []
        for j, f in enumerate(raw.get("functions", []) or []):
            fn = _parse_function(f, f"{path}.functions[{j}]", problems)
            if fn is not None:
                functions.append(fn)
        status = raw.get("status", {})
        if not isinstance(status, dict):
            problems.append(f"{path}.status: expected an object")
            status = {}
        extras = {k: v for k, v in raw.items() if k not in _KNOWN_DEVICE_KEYS}
        entries.append(
            DeviceEntry(
                name=name,
                functions=functions,
                status={str(k): str(v) for k, v in status.items()},
                address=str(raw.get("address", "")),
                category=str(raw.get("category", "other")),
                extras=extras,
            )
        )
    if problems:
        raise CatalogSchemaError(problems)
    extras = {k: v for k, v in doc.items() if k not in {"devices", "schema_version"}}
    return DeviceCatalog(entries=entries, extras=extras)


def catalog_to_dict(catalog: DeviceCatalog) -> dict:
    return {
        "schema_version": CATALOG_SCHEMA_VERSION,
        "devices": [
            {
                "name": e.name,
                "category": e.category,
                "functions": [
                    {
                        "id": f.id,
                        "display": f.display,
                        "args": [{"name": a.name, "type": a.type} for a in f.args],
                        "presets": [
                            {"label": p.label, "args": list(p.args)} for p in f.presets
                        ],
                    }
                    for f in e.functions
                ],
                "status": dict(e.status),
                "address": e.address,
                **e.extras,
            }
            for e in catalog.entries
        ],
        **catalog.extras,
    }
