"""The shipped catalog of named groups and name resolution."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import GroupError, LatticeCapExceeded, OrderCapExceeded
from .group import ORDER_CAP, FiniteGroup, GroupSpec, build_group
from .subgroups import LATTICE_CAP

TAGS = frozenset(
    {"abelian_p", "eppo_expected", "coincidence_expected", "counterexample", "slow", "reference"}
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: GroupSpec | None
    tags: frozenset[str]
    order: int | None = None  # known order for reference-only entries

    @property
    def slow(self) -> bool:
        return "slow" in self.tags

    @property
    def reference(self) -> bool:
        return self.spec is None


def parse_catalog(data: list) -> list[CatalogEntry]:
    entries = []
    seen = set()
    for item in data:
        name = item["name"]
        if name in seen:
            raise ValueError(f"duplicate catalog name {name!r}")
        seen.add(name)
        tags = frozenset(item.get("tags", []))
        unknown = tags - TAGS
        if unknown:
            raise ValueError(f"{name}: unknown tags {sorted(unknown)}")
        spec = GroupSpec.from_json(item["spec"]) if "spec" in item else None
        if spec is None and "order" not in item:
            raise ValueError(f"{name}: entry needs a spec or an order")
        entries.append(CatalogEntry(name, spec, tags, item.get("order")))
    return entries


def load_catalog(path: str | Path | None = None) -> list[CatalogEntry]:
    if path is None:
        text = resources.files("grouplex").joinpath("data/catalog.json").read_text()
    else:
        text = Path(path).read_text()
    return parse_catalog(json.loads(text))


@lru_cache(maxsize=1)
def default_catalog() -> tuple[CatalogEntry, ...]:
    return tuple(load_catalog())


@lru_cache(maxsize=None)
def _build_cached(name: str, spec_json: str) -> FiniteGroup:
    return build_group(GroupSpec.from_json(json.loads(spec_json)), name=name)


def build_entry(entry: CatalogEntry, needs_lattice: bool = False) -> FiniteGroup:
    """Build a catalog group, raising the appropriate cap error for reference entries."""
    if entry.spec is None:
        order = entry.order or 0
        if needs_lattice and order > LATTICE_CAP:
            raise LatticeCapExceeded(
                f"{entry.name} has order {order}; its subgroup lattice exceeds the cap {LATTICE_CAP}"
            )
        raise OrderCapExceeded(f"{entry.name} has order {order}, above the order cap {ORDER_CAP}")
    if needs_lattice:
        order = entry.order
        if order is not None and order > LATTICE_CAP:
            raise LatticeCapExceeded(f"{entry.name}: order {order} exceeds lattice cap {LATTICE_CAP}")
    return _build_cached(entry.name, json.dumps(entry.spec.to_json(), sort_keys=True))


_FAMILY_NAME = re.compile(r"^([CDSA])(\d+)$")


def resolve_group(
    text: str,
    catalog: list[CatalogEntry] | tuple[CatalogEntry, ...] | None = None,
    needs_lattice: bool = False,
) -> FiniteGroup:
    """A catalog name, a family shorthand such as ``C12``/``D5``/``S4``/``A5``, or inline JSON."""
    catalog = default_catalog() if catalog is None else catalog
    for entry in catalog:
        if entry.name == text:
            return build_entry(entry, needs_lattice)
    m = _FAMILY_NAME.match(text)
    if m:
        fam = {"C": "cyclic", "D": "dihedral", "S": "symmetric", "A": "alternating"}[m.group(1)]
        return build_group({"family": fam, "n": int(m.group(2))}, name=text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        raise GroupError(f"unknown group {text!r}: not a catalog name or JSON spec") from None
    return build_group(data)
