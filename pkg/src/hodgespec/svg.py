"""Minimal SVG line plots of padded spectral differences."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

COLORS = {"G-K": "#ff7f0e", "G-U": "#1f77b4"}
_FALLBACK = ("#2ca02c", "#d62728", "#9467bd")

WIDTH, HEIGHT, PAD = 480, 240, 36


def _panel(title: str, series: dict[str, np.ndarray], y0: float) -> list[str]:
    out = [f'<g transform="translate(0,{y0:g})">',
           f'<text x="{PAD}" y="16" font-size="12">{escape(title)}</text>']
    vals = [np.asarray(v, dtype=float) for v in series.values()]
    n = max((len(v) for v in vals), default=0)
    hi = max((float(v.max()) for v in vals if v.size), default=1.0)
    lo = min((float(v.min()) for v in vals if v.size), default=0.0)
    lo, hi = min(lo, 0.0), max(hi, lo + 1.0)
    w, h = WIDTH - 2 * PAD, HEIGHT - 2 * PAD

    def xy(i, v):
        x = PAD + (w * i / (n - 1) if n > 1 else w / 2)
        y = PAD + h * (hi - v) / (hi - lo)
        return f"{x:.2f},{y:.2f}"

    out.append(f'<line x1="{PAD}" y1="{PAD + h * hi / (hi - lo):.2f}" x2="{PAD + w}" '
               f'y2="{PAD + h * hi / (hi - lo):.2f}" stroke="#999" stroke-width="0.5"/>')
    for k, (label, v) in enumerate(series.items()):
        color = COLORS.get(label, _FALLBACK[k % len(_FALLBACK)])
        pts = " ".join(xy(i, float(t)) for i, t in enumerate(v))
        out.append(f'<polyline data-label="{escape(label)}" fill="none" stroke="{color}" '
                   f'stroke-width="1.5" points="{pts}"/>')
        out.append(f'<text x="{PAD + w - 60}" y="{16 + 14 * k}" font-size="11" fill="{color}">'
                   f'{escape(label)}</text>')
    out.append("</g>")
    return out


def difference_svg(panels: list[tuple[str, dict[str, np.ndarray]]]) -> str:
    """One stacked panel per ``(title, {label: sequence})``; one polyline per sequence."""
    total = HEIGHT * max(len(panels), 1)
    parts = ['<?xml version="1.0" encoding="UTF-8"?>',
             f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{total}" '
             f'viewBox="0 0 {WIDTH} {total}">']
    for i, (title, series) in enumerate(panels):
        parts.extend(_panel(title, series, i * HEIGHT))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
