"""
Base SVG renderer
Provides the common Jinja2 setup, the world-to-canvas mapping and the document shell
"""

import sys
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Tuple

from jinja2 import Environment, StrictUndefined

from ..geometry import Point
from ..ksets import Instance
from ..models import RenderConfig
from ..utils import to_float

Rect = Tuple[Fraction, Fraction, Fraction, Fraction]  # x_min, y_min, x_max, y_max


def bounding_rect(points: Iterable[Point]) -> Rect:
    points = list(points)
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def inflate_rect(rect: Rect, percent: int) -> Rect:
    """Grow each side by `percent` of the span; a zero span counts as 1"""
    x_min, y_min, x_max, y_max = rect
    dx = (x_max - x_min) or Fraction(1)
    dy = (y_max - y_min) or Fraction(1)
    px, py = dx * percent / 100, dy * percent / 100
    return x_min - px, y_min - py, x_max + px, y_max + py


@dataclass(frozen=True)
class Viewport:
    """Affine map from a world rectangle onto the canvas minus its margin, y axis up"""
    world: Rect
    width: int
    height: int
    margin_percent: int

    @property
    def margins(self) -> Tuple[Fraction, Fraction]:
        return (Fraction(self.width * self.margin_percent, 100),
                Fraction(self.height * self.margin_percent, 100))

    def to_canvas(self, x: Fraction, y: Fraction) -> Tuple[Fraction, Fraction]:
        x_min, y_min, x_max, y_max = self.world
        mx, my = self.margins
        span_x = (x_max - x_min) or Fraction(1)
        span_y = (y_max - y_min) or Fraction(1)
        cx = mx + (x - x_min) * (self.width - 2 * mx) / span_x
        cy = self.height - my - (y - y_min) * (self.height - 2 * my) / span_y
        return cx, cy

    def point(self, p: Point) -> Dict[str, Fraction]:
        cx, cy = self.to_canvas(p.x, p.y)
        return {"x": cx, "y": cy}

    def clip_rect(self) -> Dict[str, Fraction]:
        """Canvas rectangle covered by the world rectangle"""
        x_min, y_min, x_max, y_max = self.world
        left, top = self.to_canvas(x_min, y_max)
        right, bottom = self.to_canvas(x_max, y_min)
        return {"x": left, "y": top, "width": right - left, "height": bottom - top}


def format_number(value) -> str:
    """Six-decimal canvas coordinate; the only place a float appears"""
    if isinstance(value, (int, Fraction)):
        value = to_float(Fraction(value))
    return f"{value:.6f}"


class BaseRenderer(ABC):
    """Base class for the primal and dual views"""

    DOCUMENT_TEMPLATE = """\
<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{{ width }}" height="{{ height }}" viewBox="0 0 {{ width }} {{ height }}">
<desc>{{ description }}</desc>
<style>
{{ style }}
</style>
<rect class="background" x="0" y="0" width="{{ width }}" height="{{ height }}" fill="white"/>
{{ body }}
</svg>
"""

    STYLE = ""
    SCENE_TEMPLATE = ""

    def __init__(self, config: Optional[RenderConfig] = None, debug: bool = False):
        self.config = config or RenderConfig()
        self.debug = debug
        self.env = Environment(trim_blocks=True, lstrip_blocks=True, undefined=StrictUndefined)
        self.env.filters['num'] = format_number
        self.document = self.env.from_string(self.DOCUMENT_TEMPLATE)
        self.scene = self.env.from_string(self.SCENE_TEMPLATE)

    def viewport(self, world: Rect) -> Viewport:
        return Viewport(world, self.config.width, self.config.height, self.config.margin_percent)

    @abstractmethod
    def build_scene(self, inst: Instance, k: int) -> Dict[str, Any]:
        """Template context of the view - must be implemented by subclasses"""
        pass

    @abstractmethod
    def describe(self, inst: Instance, k: int) -> str:
        pass

    def render(self, inst: Instance, k: int) -> str:
        context = self.build_scene(inst, k)
        if self.debug:
            counts = {key: len(value) for key, value in context.items() if isinstance(value, list)}
            print(f"📐 {self.__class__.__name__}: {counts}", file=sys.stderr)
        body = self.scene.render(config=self.config, **context)
        return self.document.render(
            width=self.config.width,
            height=self.config.height,
            description=self.describe(inst, k),
            style=self.STYLE,
            body=body,
        )
