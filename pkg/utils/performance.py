"""
Timings and resident-memory deltas for enumerations and verification suites
"""

import functools
import logging
import time
from collections import defaultdict
from typing import Any, Dict, List, NamedTuple, Optional

import psutil

logger = logging.getLogger(__name__)

_PROCESS = psutil.Process()


class Sample(NamedTuple):
    seconds: float
    memory_mb: float
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


_samples: Dict[str, List[Sample]] = defaultdict(list)


def _rss_megabytes() -> float:
    return _PROCESS.memory_info().rss / (1024 * 1024)


def monitor_performance(operation_name: str = None):
    """
    Record wall time and the change in resident memory of each call.
    The default name is ``module.function``.
    """

    def decorator(func):
        name = operation_name or f"{func.__module__}.{func.__name__}"

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start, rss = time.perf_counter(), _rss_megabytes()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                elapsed = time.perf_counter() - start
                _samples[name].append(Sample(elapsed, 0.0, str(e)))
                logger.error(f"PERF ERROR: {name} - {elapsed:.3f}s, Error: {e}")
                raise
            elapsed = time.perf_counter() - start
            delta = _rss_megabytes() - rss
            _samples[name].append(Sample(elapsed, delta))
            logger.info(f"PERF: {name} - {elapsed:.3f}s, Memory: {delta:+.2f}MB")
            return result

        return wrapper

    return decorator


def get_performance_summary() -> Dict[str, Any]:
    """Per-operation call counts, timings and the largest memory delta"""
    summary = {}
    for name, samples in _samples.items():
        ok = [sample for sample in samples if sample.ok]
        times = [sample.seconds for sample in ok]
        summary[name] = {
            "total_calls": len(samples),
            "successful_calls": len(ok),
            "failed_calls": len(samples) - len(ok),
            "total_execution_time": sum(times),
            "avg_execution_time": sum(times) / len(times) if times else 0,
            "max_execution_time": max(times, default=0),
            "max_memory_delta": max((sample.memory_mb for sample in ok), default=0.0),
        }
    return summary


def format_performance_summary() -> List[str]:
    """One line per operation, slowest first"""
    summary = get_performance_summary()
    ordered = sorted(summary.items(), key=lambda item: -item[1]["total_execution_time"])
    return [
        f"{name}: calls={stats['total_calls']} total={stats['total_execution_time']:.3f}s "
        f"max={stats['max_execution_time']:.3f}s mem={stats['max_memory_delta']:+.2f}MB"
        for name, stats in ordered
    ]


def clear_performance_metrics():
    _samples.clear()
    logger.info("Performance metrics cleared")
