"""Plugin manager for superhc verification suites"""

import asyncio
import logging
import time
from typing import TYPE_CHECKING, Any, Dict, List, Optional

from src.core.report import VerificationReport

if TYPE_CHECKING:
    from src.plugins.base_plugin import BasePlugin

logger = logging.getLogger(__name__)


class PluginManager:
    """Manage suite lifecycle and execution"""

    def __init__(self):
        self.plugins: Dict[str, "BasePlugin"] = {}
        self.config_map: Dict[str, Dict[str, Any]] = {}

    async def register(self, plugin: "BasePlugin", config: Dict[str, Any]):
        """
        Register and initialize a plugin

        Args:
            plugin: Plugin instance
            config: Plugin configuration
        """
        plugin_name = plugin.name

        if plugin_name in self.plugins:
            logger.warning(f"Plugin {plugin_name} already registered, replacing")

        self.plugins[plugin_name] = plugin
        self.config_map[plugin_name] = config

        await plugin.initialize(config)
        logger.info(f"Registered plugin: {plugin_name}")

    async def run_one(self, plugin: "BasePlugin") -> VerificationReport:
        """Run a suite, turning an exception into a failed check"""
        start = time.perf_counter()
        try:
            report = await plugin.verify()
        except Exception as e:
            logger.error(f"Error running {plugin.name}: {e}")
            report = VerificationReport(plugin.name)
            report.add("exception", False, "no exception", f"{type(e).__name__}: {e}")
        report.wall_time = time.perf_counter() - start
        for check in report.failed:
            logger.error(f"{plugin.name}: check {check.id} failed (expected {check.expected}, got {check.actual})")
        logger.info(report.summary())
        return report

    async def run_all(self, names: Optional[List[str]] = None) -> List[VerificationReport]:
        """
        Run enabled suites concurrently

        Args:
            names: Restrict to these suites; all registered ones when None

        Returns:
            Reports in registration order
        """
        selected = [
            plugin for plugin in self.plugins.values()
            if plugin.enabled and (names is None or plugin.name in names)
        ]
        return list(await asyncio.gather(*(self.run_one(plugin) for plugin in selected)))

    async def shutdown_all(self):
        """Shutdown all plugins"""
        for plugin in self.plugins.values():
            try:
                await plugin.shutdown()
            except Exception as e:
                logger.error(f"Error shutting down {plugin.name}: {e}")

        logger.info("All plugins shut down")
