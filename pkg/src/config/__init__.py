"""
Settings and experiment presets.
"""

from .settings import Settings, load_settings
from .experiments import EXPERIMENTS, get_preset

__all__ = ['EXPERIMENTS', 'Settings', 'get_preset', 'load_settings']
