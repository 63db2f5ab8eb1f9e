"""Core module initialization"""

from .config import Config
from .report import CheckRecord, VerificationReport
from .plugin_manager import PluginManager

__all__ = [
    'Config',
    'CheckRecord',
    'VerificationReport',
    'PluginManager',
]
