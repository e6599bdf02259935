# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

import operator

import pytest

from claw_square.workers import OrderedCollector, Task

TASKS = [Task(f"square-{i}", operator.mul, (i, i)) for i in range(6)]


def test_inline_run_keeps_order():
    collector = OrderedCollector(1)
    results = [(task.name, result) for task, result in collector.run(TASKS)]
    assert results == [(f"square-{i}", i * i) for i in range(6)]
    assert collector.completed == 6


def test_needs_a_worker():
    with pytest.raises(ValueError):
        OrderedCollector(0)


@pytest.mark.slow
def test_process_pool_keeps_order():
    collector = OrderedCollector(2)
    assert [result for _, result in collector.run(TASKS)] == [i * i for i in range(6)]
