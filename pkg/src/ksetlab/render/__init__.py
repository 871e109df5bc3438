"""
SVG renderers for the primal and dual views
"""

from typing import Optional

from ..ksets import Instance
from ..models import VIEWS, RenderConfig
from .base_renderer import BaseRenderer
from .dual import DualRenderer
from .primal import PrimalRenderer


def load_renderer(view: str, config: Optional[RenderConfig] = None, debug: bool = False) -> BaseRenderer:
    """Renderer for a view name; unknown names are rejected"""
    view = view.lower()
    if view == "primal":
        return PrimalRenderer(config, debug=debug)
    elif view == "dual":
        return DualRenderer(config, debug=debug)
    raise ValueError(f"unknown view {view!r}, expected one of {', '.join(VIEWS)}")


def render_svg(inst: Instance, k: int, view: str, config: Optional[RenderConfig] = None,
               debug: bool = False) -> str:
    """SVG document for one instance, k and view; identical input gives identical bytes"""
    return load_renderer(view, config, debug).render(inst, k)


__all__ = ['BaseRenderer', 'DualRenderer', 'PrimalRenderer', 'load_renderer', 'render_svg']
