"""Bundled knot and link fixtures (PD codes plus reference invariants)."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .diagram import Diagram, diagram_from_json


@dataclass(frozen=True)
class KnotFixture:
    name: str
    diagram: Diagram
    known: Dict[str, object] = field(default_factory=dict)
    aliases: Tuple[str, ...] = ()
    source: Optional[str] = None

    @property
    def arc_index(self) -> Optional[int]:
        return self.known.get("arc_index")

    @property
    def crossing_number(self) -> Optional[int]:
        return self.known.get("crossing_number")


def fixture_from_json(obj: dict) -> KnotFixture:
    d = diagram_from_json(obj)
    return KnotFixture(
        name=obj.get("name") or "?",
        diagram=d,
        known=dict(obj.get("known", {})),
        aliases=tuple(obj.get("aliases", ())),
        source=obj.get("source"),
    )


def _fixture_dir():
    return resources.files("fourpage").joinpath("data", "fixtures")


def load_fixtures() -> List[KnotFixture]:
    """All bundled fixtures, sorted by name."""
    out = []
    for entry in _fixture_dir().iterdir():
        if entry.name.endswith(".json"):
            out.append(fixture_from_json(json.loads(entry.read_text())))
    return sorted(out, key=lambda f: f.name)


def get_fixture(name: str) -> KnotFixture:
    for fx in load_fixtures():
        if name == fx.name or name in fx.aliases:
            return fx
    raise KeyError("no bundled fixture named %r" % name)


def fixture_path(name: str) -> Path:
    return Path(str(_fixture_dir().joinpath("%s.json" % get_fixture(name).name)))
