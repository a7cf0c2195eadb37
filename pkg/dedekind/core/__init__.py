"""
Core module - Configuration and error types.
"""

from .config import Settings, get_settings
from .exceptions import DedekindError

__all__ = ["Settings", "get_settings", "DedekindError"]
