"""Dot plots of attractor families: one row per attractor, one column per
position, a dot wherever the attractor holds that position."""
from __future__ import annotations

from dataclasses import dataclass

from .enumeration import AttractorFamily
from .fibonacci import fib_smallest_attractors
from .period_doubling import pd_smallest_attractors
from .words import fib_number

MAX_TEXT_WIDTH = 160
CELL = 10


@dataclass(frozen=True)
class PlotSpec:
    word_family: str
    n: int
    family: AttractorFamily
    length: int
    fmt: str = "text"


def plot_spec(word_family: str, n: int, svg: bool = False) -> PlotSpec:
    if word_family == "fib":
        family, _ = fib_smallest_attractors(n)
        length = fib_number(n)
    elif word_family == "pd":
        family, _ = pd_smallest_attractors(n)
        length = 2**n
    else:
        raise ValueError(f"unknown word family {word_family!r}")
    return PlotSpec(word_family, n, family, length, "svg" if svg else "text")


def render_text(spec: PlotSpec) -> str:
    if spec.length > MAX_TEXT_WIDTH:
        raise ValueError(f"{spec.length} columns is too wide for text output; use --svg")
    width = spec.length
    tens = "".join(str(p // 10 % 10) if p % 10 == 0 else " " for p in range(1, width + 1))
    units = "".join(str(p % 10) for p in range(1, width + 1))
    lines = [tens.rstrip(), units]
    for members in spec.family:
        marks = set(members)
        lines.append("".join("o" if p in marks else "." for p in range(1, width + 1)))
    return "\n".join(lines) + "\n"


def render_svg(spec: PlotSpec) -> str:
    rows = len(spec.family)
    width = CELL * (spec.length + 2)
    height = CELL * (rows + 3)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<line x1="{CELL}" y1="{CELL}" x2="{CELL * (spec.length + 1)}" y2="{CELL}" stroke="#888888" stroke-width="1"/>',
    ]
    for p in range(1, spec.length + 1):
        tick = CELL // 2 if p % 5 == 0 else CELL // 4
        out.append(f'<line x1="{CELL * p + CELL // 2}" y1="{CELL - tick}" x2="{CELL * p + CELL // 2}" y2="{CELL}" stroke="#888888" stroke-width="1"/>')
    for row, members in enumerate(spec.family):
        y = CELL * (row + 2) + CELL // 2
        out.append(f'<g class="attractor" data-positions="{",".join(map(str, members))}">')
        for p in members:
            out.append(f'<circle cx="{CELL * p + CELL // 2}" cy="{y}" r="3" fill="#000000"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot(spec: PlotSpec) -> str:
    return render_svg(spec) if spec.fmt == "svg" else render_text(spec)
