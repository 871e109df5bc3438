"""
Configuration models for instance generation, sweeps and rendering
"""

from typing import Optional

from zencfg import ConfigBase

SHAPES = ("uniform", "parabola", "grid-jitter")
VIEWS = ("primal", "dual")


class GenSpec(ConfigBase):
    """Seeded random instance generator settings"""
    shape: str = "uniform"  # "uniform", "parabola" or "grid-jitter"
    n: int = 10
    coord_range: int = 100  # coordinates drawn from [-R, R]
    seed: int = 0
    max_retries: int = 100  # resamples per point before giving up


class SweepConfig(ConfigBase):
    """Randomized verification sweep"""
    n: int = 10
    n_max: Optional[int] = None  # when set, each trial draws n from [n, n_max]
    k: Optional[int] = None      # None sweeps every k in [1, n-1]
    trials: int = 100
    seed: int = 0
    shape: str = "uniform"
    coord_range: int = 100


class RenderConfig(ConfigBase):
    """SVG canvas and styling"""
    width: int = 800
    height: int = 600
    margin_percent: int = 5
    inflate_percent: int = 20  # dual view: vertex bounding box growth per side

    # Chain hues are spread evenly; saturation and lightness are fixed
    saturation: int = 70
    lightness: int = 45

    show_witness: bool = True
    point_radius: int = 5
