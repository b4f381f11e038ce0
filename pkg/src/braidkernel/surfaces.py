"""Closed-surface bookkeeping.

Nonorientable genus is counted in crosscaps (N1 = projective plane,
N2 = Klein bottle), so the Euler characteristic is 2 - 2g for S_g and
2 - k for N_k.  Human names are attached as aliases; CLI output prints
label and name together since nonorientable indexing conventions vary.
"""

from __future__ import annotations

from dataclasses import dataclass


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceKind:
    orientable: bool
    genus: int

    def __post_init__(self):
        if self.orientable and self.genus < 0:
            raise SurfaceError("orientable genus must be >= 0")
        if not self.orientable and self.genus < 1:
            raise SurfaceError("nonorientable genus (crosscaps) must be >= 1")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    @property
    def label(self) -> str:
        return f"S{self.genus}" if self.orientable else f"N{self.genus}"

    def __str__(self):
        return self.label


SPHERE = SurfaceKind(True, 0)
TORUS = SurfaceKind(True, 1)
RP2 = SurfaceKind(False, 1)
KLEIN = SurfaceKind(False, 2)

_NAMES = {
    SPHERE: "sphere",
    TORUS: "torus",
    RP2: "projective plane",
    KLEIN: "Klein bottle",
}

_ALIASES = {
    "sphere": SPHERE,
    "torus": TORUS,
    "rp2": RP2,
    "projective-plane": RP2,
    "klein": KLEIN,
    "klein-bottle": KLEIN,
}


def euler_char(s: SurfaceKind) -> int:
    return s.euler_characteristic


def describe_surface(s: SurfaceKind) -> str:
    """Label plus a human name, e.g. ``N2 (Klein bottle)``."""
    name = _NAMES.get(s)
    if name is None:
        name = (f"orientable, genus {s.genus}" if s.orientable
                else f"nonorientable, {s.genus} crosscaps")
    return f"{s.label} ({name})"


def parse_surface(text: str) -> SurfaceKind:
    """Accepts S<g>/N<k> labels, common names, and orientable:<g> /
    nonorientable:<k> forms."""
    t = text.strip().lower()
    if t in _ALIASES:
        return _ALIASES[t]
    for prefix, orientable in (("orientable:", True), ("nonorientable:", False),
                               ("s", True), ("n", False)):
        if t.startswith(prefix) and t[len(prefix):].isdigit():
            return SurfaceKind(orientable, int(t[len(prefix):]))
    raise SurfaceError(f"unrecognized surface {text!r}")
