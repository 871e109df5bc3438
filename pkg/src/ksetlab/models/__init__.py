"""
Configuration models for ksetlab
Single import point for all configuration needs
"""

from .config import SHAPES, VIEWS, GenSpec, RenderConfig, SweepConfig

__all__ = ['SHAPES', 'VIEWS', 'GenSpec', 'RenderConfig', 'SweepConfig']
