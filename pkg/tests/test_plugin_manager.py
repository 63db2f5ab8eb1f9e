import asyncio

from src.core.plugin_manager import PluginManager
from src.core.report import VerificationReport
from src.plugins.base_plugin import BasePlugin
from src.plugins.verification.rings import TriangularityPlugin


class CountingPlugin(BasePlugin):
    def __init__(self, suite='counting', fail=False, crash=False):
        super().__init__()
        self.suite = suite
        self.fail = fail
        self.crash = crash
        self.stopped = False

    @property
    def name(self):
        return self.suite

    def run_checks(self):
        if self.crash:
            raise RuntimeError("boom")
        report = VerificationReport(self.name)
        report.add("one", True, 1, 1)
        report.add("two", not self.fail, 2, 3 if self.fail else 2)
        return report

    async def shutdown(self):
        self.stopped = True


def _run(plugins, config=None, names=None):
    async def go():
        manager = PluginManager()
        for plugin in plugins:
            await manager.register(plugin, config or {})
        reports = await manager.run_all(names)
        await manager.shutdown_all()
        return manager, reports
    return asyncio.run(go())


def test_reports_in_registration_order():
    _, reports = _run([CountingPlugin('a'), CountingPlugin('b', fail=True)])
    assert [r.suite for r in reports] == ['a', 'b']
    assert reports[0].ok
    assert not reports[1].ok
    assert [c.id for c in reports[1].failed] == ['two']
    assert reports[1].to_json()['checks'][1] == {'id': 'two', 'status': 'fail', 'expected': '2', 'actual': '3'}


def test_exception_becomes_failed_check():
    _, reports = _run([CountingPlugin(crash=True)])
    (report,) = reports
    assert not report.ok
    assert report.checks[0].id == 'exception'
    assert 'RuntimeError: boom' in report.checks[0].actual


def test_disabled_suites_are_skipped():
    config = {'verification': {'enabled': ['a']}}
    manager, reports = _run([CountingPlugin('a'), CountingPlugin('b')], config)
    assert [r.suite for r in reports] == ['a']
    assert not manager.plugins['b'].enabled


def test_name_filter_and_shutdown():
    plugins = [CountingPlugin('a'), CountingPlugin('b')]
    _, reports = _run(plugins, names=['b'])
    assert [r.suite for r in reports] == ['b']
    assert all(p.stopped for p in plugins)


def test_replacing_a_plugin_warns(caplog):
    _run([CountingPlugin('a'), CountingPlugin('a')])
    assert 'already registered' in caplog.text


def test_empty_report_is_not_ok():
    report = VerificationReport('empty')
    assert not report.ok
    assert report.summary() == 'empty: 0/0 passed (0.00s)'


def test_triangularity_reports_degenerate_parameters():
    config = {
        'interp': {'slack': 3},
        'verification': {
            'triangularity': {
                'degree': 2,
                'params': [{'k': '-3', 'h': '1/3'}],
                'degenerate': [{'k': '-3', 'h': '2', 'hooks': ['2']}],
            },
        },
    }
    _, reports = _run([TriangularityPlugin()], config)
    checks = {c.id: c for c in reports[0].checks}
    assert checks['k=-3,h=2 degenerate'].passed
    assert checks['k=-3,h=2 degenerate'].actual == "['(2)']"
    assert checks['k=-3,h=2 below degree 2'].passed
    assert reports[0].ok
