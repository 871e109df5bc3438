"""
Primal view: the points, the edges of G and a witness line cutting off a k-set
"""

from typing import Any, Dict

from ..graph import build_graph, witness_line
from ..ksets import Instance
from .base_renderer import BaseRenderer, bounding_rect


class PrimalRenderer(BaseRenderer):

    STYLE = """\
.point { fill: black; }
.label { font: 12px sans-serif; fill: #444; }
.edge { stroke: #1f4e9c; stroke-width: 2; }
.witness { stroke: #c0392b; stroke-width: 1.5; stroke-dasharray: 6 4; }"""

    SCENE_TEMPLATE = """\
<defs>
<clipPath id="frame"><rect x="{{ frame.x|num }}" y="{{ frame.y|num }}" width="{{ frame.width|num }}" height="{{ frame.height|num }}"/></clipPath>
</defs>
{% if witness %}
<line class="witness" clip-path="url(#frame)" x1="{{ witness.x1|num }}" y1="{{ witness.y1|num }}" x2="{{ witness.x2|num }}" y2="{{ witness.y2|num }}"/>
{% endif %}
{% for edge in edges %}
<line class="edge" data-pair="{{ edge.pair }}" x1="{{ edge.x1|num }}" y1="{{ edge.y1|num }}" x2="{{ edge.x2|num }}" y2="{{ edge.y2|num }}"/>
{% endfor %}
{% for point in points %}
<circle class="point" cx="{{ point.x|num }}" cy="{{ point.y|num }}" r="{{ config.point_radius }}"/>
<text class="label" x="{{ (point.x + 7)|num }}" y="{{ (point.y - 7)|num }}">{{ point.label }}</text>
{% endfor %}"""

    def describe(self, inst: Instance, k: int) -> str:
        return f"primal plane: {inst.n} points, graph G for k={k}"

    def build_scene(self, inst: Instance, k: int) -> Dict[str, Any]:
        graph = build_graph(inst, k)
        world = bounding_rect(inst.points)
        view = self.viewport(world)

        points = [dict(view.point(p), label=i) for i, p in enumerate(inst.points)]
        edges = []
        for edge in graph.edges:
            start, end = view.point(edge.segment.p), view.point(edge.segment.q)
            edges.append({
                "pair": f"{edge.pair[0]}-{edge.pair[1]}",
                "x1": start["x"], "y1": start["y"], "x2": end["x"], "y2": end["y"],
            })

        witness = None
        if self.config.show_witness and graph.edges:
            line = witness_line(inst, graph.edges[0])
            x_min, _, x_max, _ = world
            x1, y1 = view.to_canvas(x_min, line.at(x_min))
            x2, y2 = view.to_canvas(x_max, line.at(x_max))
            witness = {"x1": x1, "y1": y1, "x2": x2, "y2": y2}

        return {
            "frame": view.clip_rect(),
            "points": points,
            "edges": edges,
            "witness": witness,
        }
