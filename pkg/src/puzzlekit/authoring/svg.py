"""Minimal deterministic SVG writer."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr


def num(x: float) -> str:
    """Fixed two-decimal formatting with trailing zeros stripped."""
    text = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


@dataclass(frozen=True)
class RenderSpec:
    width: int = 480
    height: int = 480
    font_family: str = "DejaVu Sans, Arial, sans-serif"
    background: str = "#ffffff"


class Svg:
    def __init__(self, width: float, height: float, spec: RenderSpec = RenderSpec()):
        self.width, self.height, self.spec = width, height, spec
        self.parts: list[str] = []

    def _attrs(self, attrs: dict) -> str:
        out = []
        for k, v in attrs.items():
            if v is None:
                continue
            value = num(v) if isinstance(v, (int, float)) and not isinstance(v, bool) else str(v)
            out.append(f"{k.rstrip('_').replace('_', '-')}={quoteattr(value)}")
        return " ".join(out)

    def add(self, tag: str, text: str | None = None, **attrs) -> None:
        a = self._attrs(attrs)
        if text is None:
            self.parts.append(f"<{tag} {a}/>")
        else:
            self.parts.append(f"<{tag} {a}>{escape(text)}</{tag}>")

    def rect(self, x, y, w, h, fill="none", stroke=None, stroke_width=None, **kw) -> None:
        self.add("rect", x=x, y=y, width=w, height=h, fill=fill, stroke=stroke,
                 stroke_width=stroke_width, **kw)

    def line(self, x1, y1, x2, y2, stroke="#000000", stroke_width=1, **kw) -> None:
        self.add("line", x1=x1, y1=y1, x2=x2, y2=y2, stroke=stroke, stroke_width=stroke_width, **kw)

    def circle(self, cx, cy, r, fill="none", stroke=None, stroke_width=None) -> None:
        self.add("circle", cx=cx, cy=cy, r=r, fill=fill, stroke=stroke, stroke_width=stroke_width)

    def polygon(self, points, fill="none", stroke=None, stroke_width=None) -> None:
        pts = " ".join(f"{num(x)},{num(y)}" for x, y in points)
        self.add("polygon", points=pts, fill=fill, stroke=stroke, stroke_width=stroke_width)

    def path(self, d: str, fill="none", stroke=None, stroke_width=None) -> None:
        self.add("path", d=d, fill=fill, stroke=stroke, stroke_width=stroke_width)

    def text(self, x, y, content: str, size=14, anchor="middle", fill="#000000", weight=None) -> None:
        self.add("text", content, x=x, y=y, font_size=size, text_anchor=anchor,
                 dominant_baseline="central", fill=fill, font_weight=weight,
                 font_family=self.spec.font_family)

    def to_string(self) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
                f'width="{num(self.width)}" height="{num(self.height)}" '
                f'viewBox="0 0 {num(self.width)} {num(self.height)}">')
        bg = f'<rect x="0" y="0" width="{num(self.width)}" height="{num(self.height)}" fill="{self.spec.background}"/>'
        return "\n".join([head, bg, *self.parts, "</svg>"]) + "\n"
