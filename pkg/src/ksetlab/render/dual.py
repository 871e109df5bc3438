"""
Dual view: the arrangement clipped to its inflated vertex box, the k-level, the
concave chains below it and the V_{k-1} vertices where the chains turn
"""

from fractions import Fraction
from typing import Any, Dict, List, Sequence

from ..arrangement import ArrVertex, build_arrangement, extract_k_level
from ..chains import decompose_chains
from ..geometry import Line
from ..ksets import Instance
from .base_renderer import BaseRenderer, Viewport, bounding_rect, format_number, inflate_rect


def _polyline(view: Viewport, lines: Sequence[Line], first: int, last: int,
              vertices: Sequence[ArrVertex], x_min: Fraction, x_max: Fraction) -> str:
    """Canvas points of a path entering on `first` at x_min and leaving on `last` at x_max"""
    stops = [(x_min, lines[first].at(x_min))]
    stops.extend((v.x, v.y) for v in vertices)
    stops.append((x_max, lines[last].at(x_max)))
    coords = []
    for x, y in stops:
        cx, cy = view.to_canvas(x, y)
        coords.append(f"{format_number(cx)},{format_number(cy)}")
    return " ".join(coords)


class DualRenderer(BaseRenderer):

    STYLE = """\
.dual-line { stroke: #999; stroke-width: 1; }
.level { fill: none; stroke: black; stroke-width: 5; stroke-linejoin: round; }
.chain { fill: none; stroke-width: 2; }
.turn { fill: none; stroke: black; stroke-width: 1.5; }"""

    SCENE_TEMPLATE = """\
<defs>
<clipPath id="frame"><rect x="{{ frame.x|num }}" y="{{ frame.y|num }}" width="{{ frame.width|num }}" height="{{ frame.height|num }}"/></clipPath>
</defs>
<g clip-path="url(#frame)">
{% for line in lines %}
<line class="dual-line" data-index="{{ line.index }}" x1="{{ line.x1|num }}" y1="{{ line.y1|num }}" x2="{{ line.x2|num }}" y2="{{ line.y2|num }}"/>
{% endfor %}
<polyline class="level" points="{{ level }}"/>
{% for chain in chains %}
<polyline class="chain" data-chain="{{ chain.id }}" stroke="{{ chain.color }}" points="{{ chain.points }}"/>
{% endfor %}
</g>
{% for turn in turns %}
<circle class="turn" cx="{{ turn.x|num }}" cy="{{ turn.y|num }}" r="{{ config.point_radius }}"/>
{% endfor %}"""

    def describe(self, inst: Instance, k: int) -> str:
        return f"dual arrangement: {inst.n} lines, {k}-level and {k} concave chains"

    def chain_color(self, chain_id: int, k: int) -> str:
        hue = 360 * (chain_id - 1) // k
        return f"hsl({hue}, {self.config.saturation}%, {self.config.lightness}%)"

    def build_scene(self, inst: Instance, k: int) -> Dict[str, Any]:
        arr = build_arrangement(inst)
        level = extract_k_level(arr, k)
        chains = decompose_chains(arr, k)

        world = inflate_rect(bounding_rect(v.location for v in arr.vertices), self.config.inflate_percent)
        view = self.viewport(world)
        x_min, _, x_max, _ = world

        lines: List[Dict[str, Any]] = []
        for index, line in enumerate(arr.lines):
            x1, y1 = view.to_canvas(x_min, line.at(x_min))
            x2, y2 = view.to_canvas(x_max, line.at(x_max))
            lines.append({"index": index, "x1": x1, "y1": y1, "x2": x2, "y2": y2})

        level_points = _polyline(view, arr.lines, level.edge_lines[0], level.edge_lines[-1],
                                 level.vertex_seq, x_min, x_max)
        chain_paths = [
            {
                "id": chain.id,
                "color": self.chain_color(chain.id, k),
                "points": _polyline(view, arr.lines, chain.pieces[0].line, chain.pieces[-1].line,
                                    chain.turns, x_min, x_max),
            }
            for chain in chains.chains
        ]
        turns = [view.point(v.location) for v in arr.vertex_class(k - 1)]

        return {
            "frame": view.clip_rect(),
            "lines": lines,
            "level": level_points,
            "chains": chain_paths,
            "turns": turns,
        }
