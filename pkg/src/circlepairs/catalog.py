"""Catalog files: one text file per level, bit-exact and reproducible.

Line format (one class per line)::

    <hex config key> <hex flow key> <S|A> <GP1 line> # parent=<hex key> site=<face>,<dart_a>,<dart_b>

``S`` marks a symmetric class (swap self-equivalence exists), ``A`` an
asymmetric one.  The seed class of the two-point level carries ``# seed``
in place of provenance.  A ``#``-prefixed header records the tool version
and the equivalence-mode flags; catalogs with identical content are byte
identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .arrangement import GaussPairCode, format_gp1, parse_gp1
from .generate import Level


def catalog_filename(n_points: int) -> str:
    return f"catalog-{n_points:02d}.txt"


def format_catalog(level: Level) -> str:
    lines = [
        f"# circlepairs catalog version={__version__}",
        f"# points={level.n_points} classes={len(level.classes)}"
        " mode=config:swap+reflection flow:reflection",
    ]
    for cls in level.classes:
        flag = "S" if cls.symmetric else "A"
        if cls.parent_key is None:
            prov = "# seed"
        else:
            f, da, db = cls.site  # type: ignore[misc]
            prov = f"# parent={cls.parent_key.hex()} site={f},{da},{db}"
        lines.append(f"{cls.config_key.hex()} {cls.flow_key.hex()} {flag} {cls.gp1} {prov}")
    return "\n".join(lines) + "\n"


def write_catalog(level: Level, directory: Path) -> Path:
    path = directory / catalog_filename(level.n_points)
    path.write_text(format_catalog(level), encoding="utf-8")
    return path


@dataclass(frozen=True)
class CatalogEntry:
    config_key: bytes
    flow_key: bytes
    symmetric: bool
    code: GaussPairCode

    @property
    def gp1(self) -> str:
        return format_gp1(self.code)


def parse_catalog(text: str) -> list[CatalogEntry]:
    """Entries of a catalog document; raises ValueError with the line number."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        body = line.split("#", 1)[0].strip()
        tokens = body.split(None, 3)
        if len(tokens) != 4 or tokens[2] not in ("S", "A"):
            raise ValueError(f"line {lineno}: not a catalog line")
        try:
            config_key = bytes.fromhex(tokens[0])
            flow_key = bytes.fromhex(tokens[1])
        except ValueError:
            raise ValueError(f"line {lineno}: bad hex key") from None
        code = parse_gp1(tokens[3])
        entries.append(
            CatalogEntry(
                config_key=config_key,
                flow_key=flow_key,
                symmetric=tokens[2] == "S",
                code=code,
            )
        )
    return entries
