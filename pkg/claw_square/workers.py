# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import concurrent.futures
import logging
import typing as t

if t.TYPE_CHECKING:
    import collections.abc

log = logging.getLogger(__name__)

_T = t.TypeVar("_T")


class Task(t.NamedTuple):
    """A named unit of batch work, `function` and `args` have to be picklable for the process pool."""

    name: str
    function: collections.abc.Callable[..., t.Any]
    args: tuple = ()

    def __call__(self) -> t.Any:
        return self.function(*self.args)


def _run_task(task: Task) -> t.Any:
    log.debug(f"Running task {task.name}.")
    return task()


class OrderedCollector(t.Generic[_T]):
    """
    Run tasks on a pool of `workers` processes and hand results back in submission order.

    One worker runs everything in the calling process.
    """

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ValueError(f"Need at least one worker, got {workers}.")
        self.workers = workers
        self.completed = 0

    def run(self, tasks: collections.abc.Sequence[Task]) -> collections.abc.Iterator[tuple[Task, _T]]:
        """Yield every task with its result, in the order of `tasks`."""
        if self.workers == 1:
            for task in tasks:
                yield task, _run_task(task)
                self._advance(task, len(tasks))
            return

        with concurrent.futures.ProcessPoolExecutor(max_workers=self.workers) as executor:
            for task, result in zip(tasks, executor.map(_run_task, tasks)):
                yield task, result
                self._advance(task, len(tasks))

    def _advance(self, task: Task, total: int) -> None:
        self.completed += 1
        log.info(f"Finished {task.name} ({self.completed}/{total}).")
