"""Utility functions for the calc package."""

import contextlib
import os
import time
from typing import Dict, Iterable, Iterator, List


@contextlib.contextmanager
def stopwatch() -> Iterator[Dict[str, float]]:
    """Context manager measuring wall time; fills ``elapsed_ms`` on exit."""
    timing = {"elapsed_ms": 0.0}
    start = time.perf_counter()
    try:
        yield timing
    finally:
        timing["elapsed_ms"] = (time.perf_counter() - start) * 1000.0


def expand_instance_paths(paths: Iterable[str]) -> List[str]:
    """Expand files and directories into a sorted list of ``.smt2`` files."""
    found = []
    for path in paths:
        if os.path.isdir(path):
            for root, _dirs, files in os.walk(path):
                found.extend(os.path.join(root, name) for name in files if name.endswith(".smt2"))
        else:
            found.append(path)
    return sorted(dict.fromkeys(found))


def instance_name(path: str) -> str:
    """Instance name used in reports: the file name without extension."""
    base = os.path.basename(path)
    return base[:-5] if base.endswith(".smt2") else base
