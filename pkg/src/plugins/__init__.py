"""Plugins module initialization"""

from .base_plugin import BasePlugin

__all__ = ['BasePlugin']
