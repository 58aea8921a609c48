"""SVG figures: trochoid traces and colored torus diagrams.

Output is deterministic (fixed coordinate formatting, no timestamps) so it
can be golden-tested byte for byte.  Plane coordinates are drawn with the
y axis pointing up.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Iterable, Sequence

from .coloring import Coloring
from .diagram import Diagram
from .trochoid import TrochoidTrace

SVG_NS = "http://www.w3.org/2000/svg"
WIDTH = 600
MARGIN = 0.05
PALETTE = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"]


def _fmt(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _xy(z: complex) -> tuple[str, str]:
    return _fmt(z.real), _fmt(-z.imag)


def _points(zs: Iterable[complex]) -> str:
    return " ".join(",".join(_xy(z)) for z in zs)


def _root(zs: Sequence[complex]) -> tuple[ET.Element, float]:
    xs = [z.real for z in zs]
    ys = [-z.imag for z in zs]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = MARGIN * span
    x0, y0 = x0 - pad, y0 - pad
    w, h = x1 - x0 + pad, y1 - y0 + pad
    root = ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        width=str(WIDTH),
        height=str(max(1, round(WIDTH * h / w))),
        viewBox=" ".join(_fmt(v) for v in (x0, y0, w, h)),
    )
    return root, span


def _closed(zs: Sequence[complex]) -> list[complex]:
    return list(zs) + [zs[0]]


def _label_points(parent: ET.Element, named: Sequence[tuple[str, complex]], r: float, cls: str) -> None:
    """One circle per distinct location; coincident labels are joined with '='."""
    merged: list[tuple[complex, list[str]]] = []
    for name, z in named:
        for loc, names in merged:
            if abs(loc - z) <= 1e-9 * max(1.0, abs(z)):
                names.append(name)
                break
        else:
            merged.append((z, [name]))
    for z, names in merged:
        x, y = _xy(z)
        ET.SubElement(parent, "circle", {"class": cls, "cx": x, "cy": y, "r": _fmt(r)})
        t = ET.SubElement(
            parent, "text", {"x": _fmt(z.real + 1.5 * r), "y": _fmt(-z.imag - 1.5 * r), "font-size": _fmt(3 * r)}
        )
        t.text = "=".join(names)


def _serialize(root: ET.Element) -> str:
    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"


def trochoid_svg(trace: TrochoidTrace) -> str:
    """Fixed polygon, every placement of the moving polygon (one ``<g>`` per
    step, initial placement first) and the labeled points ``z_ij``."""
    allpts = list(trace.fixed) + [z for i in range(trace.steps + 1) for z in trace.vertices_at(i)]
    root, span = _root(allpts)
    stroke = _fmt(span / 300)
    title = ET.SubElement(root, "title")
    title.text = "({}, {}; {}, {})-trochoid".format(*trace.params)
    fixed = ET.SubElement(root, "g", {"id": "fixed", "fill": "none", "stroke": "black", "stroke-width": stroke})
    ET.SubElement(fixed, "polyline", points=_points(_closed(trace.fixed)))
    for i in range(trace.steps + 1):
        g = ET.SubElement(
            root,
            "g",
            {
                "id": f"step-{i}",
                "class": "placement",
                "fill": "none",
                "stroke": PALETTE[i % len(PALETTE)],
                "stroke-width": stroke,
                "stroke-opacity": "0.8",
            },
        )
        ET.SubElement(g, "polyline", points=_points(_closed(trace.vertices_at(i))))
    pts = ET.SubElement(root, "g", {"id": "contacts", "fill": "black"})
    named = [
        (f"z{i},{j}", complex(trace.z_grid[i, j]))
        for i in range(trace.z_grid.shape[0])
        for j in range(trace.z_grid.shape[1])
    ]
    _label_points(pts, named, span / 120, "contact")
    return _serialize(root)


def coloring_svg(d: Diagram, c: Coloring, names: Sequence[str] | None = None) -> str:
    """Arc centers of a coloring; each crossing draws the two equal-length
    segments from the over-arc center to the under-arc centers."""
    zs = list(c.centers)
    root, span = _root(zs)
    stroke = _fmt(span / 300)
    names = list(names) if names is not None else [f"a{i}" for i in range(len(zs))]
    title = ET.SubElement(root, "title")
    title.text = f"coloring at angle {c.angle:.12g}"
    legs = ET.SubElement(root, "g", {"id": "crossings", "fill": "none", "stroke-width": stroke})
    for idx, cr in enumerate(d.crossings):
        g = ET.SubElement(legs, "g", {"id": f"crossing-{idx}", "stroke": PALETTE[idx % len(PALETTE)]})
        ET.SubElement(g, "polyline", points=_points([zs[cr.under_in], zs[cr.over], zs[cr.under_out]]))
    pts = ET.SubElement(root, "g", {"id": "centers", "fill": "black"})
    _label_points(pts, list(zip(names, zs)), span / 120, "center")
    return _serialize(root)
