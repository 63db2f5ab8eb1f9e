"""Base plugin interface for verification suites"""

from abc import ABC, abstractmethod
from typing import Any, Dict
import asyncio
import logging

from src.core.report import VerificationReport

logger = logging.getLogger(__name__)


class BasePlugin(ABC):
    """Base class for all superhc verification suites"""

    def __init__(self):
        self.config: Dict[str, Any] = {}
        self._enabled = True

    @property
    @abstractmethod
    def name(self) -> str:
        """Unique suite identifier"""
        pass

    @property
    def enabled(self) -> bool:
        """Whether the suite runs in verify-all"""
        return self._enabled

    async def initialize(self, config: Dict[str, Any]):
        """
        Initialize plugin with configuration

        Args:
            config: Full configuration dict; suites read their own sections
        """
        self.config = config
        enabled = config.get('verification', {}).get('enabled')
        if enabled is not None:
            self._enabled = self.name in enabled
        logger.info(f"Initializing plugin: {self.name}")

    async def verify(self) -> VerificationReport:
        """Run the checks in a worker thread; the arithmetic is synchronous"""
        return await asyncio.to_thread(self.run_checks)

    @abstractmethod
    def run_checks(self) -> VerificationReport:
        """Synchronous body of the suite"""
        pass

    def section(self, key: str) -> Dict[str, Any]:
        return self.config.get(key, {}) or {}

    async def shutdown(self):
        """Cleanup on shutdown"""
        logger.info(f"Shutting down plugin: {self.name}")
