"""Interfaces module for superhc"""

from .cli import run_subcommand

__all__ = ['run_subcommand']
