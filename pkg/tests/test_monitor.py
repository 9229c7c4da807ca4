import logging

from qfront.monitor import SimulationMonitor


def test_rate_and_summary(caplog):
    monitor = SimulationMonitor(steps_taken=500, wall_clock_seconds=2.0)
    assert monitor.get_steps_per_second() == 250.0
    assert SimulationMonitor().get_steps_per_second() == 0.0
    with caplog.at_level(logging.INFO, logger='qfront.monitor'):
        monitor.display()
    assert 'Steps taken' in caplog.text
