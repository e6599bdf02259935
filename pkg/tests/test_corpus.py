# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

import pytest

from claw_square.corpus import (
    bench_tasks,
    claw_free_instances,
    config_rows,
    edge_name,
    extremal_rows,
    full_corpus,
    identity_rows,
    interval_rows,
    main_procedure_rows,
    non_quasi_line_instances,
    quasi_line_instances,
    run_bench,
    structure_rows,
)
from claw_square.recognition import find_claw, is_quasi_line, krausz_partition
from claw_square.verifier import Config
from claw_square.workers import Task


def test_edge_name():
    assert edge_name((0, 3, 1)) == "0-3-1"


def test_claw_free_family():
    instances = claw_free_instances(0, count=12)
    assert len(instances) == 12
    assert all(find_claw(graph) is None for _, graph in instances)
    assert instances == claw_free_instances(0, count=12)


def test_non_quasi_line_family():
    instances = non_quasi_line_instances(0, count=4)
    assert [name for name, _ in instances[:2]] == ["wheel5", "icosahedron"]
    for _, graph in instances:
        assert find_claw(graph) is None
        assert not is_quasi_line(graph)


def test_quasi_line_family():
    instances = quasi_line_instances(0, count=6)
    assert len(instances) == 6
    for _, graph in instances:
        assert is_quasi_line(graph)
        assert krausz_partition(graph) is None


def test_config_rows_pass():
    rows = config_rows(Config())
    assert all(row.passed for row in rows)


def test_interval_rows_pass():
    rows = interval_rows(0, count=20)
    assert len(rows) == 42
    assert all(row.passed for row in rows)


def test_identity_rows_pass():
    rows = identity_rows(0, 0, 5)
    assert rows
    assert all(row.passed for row in rows)


@pytest.mark.slow
def test_extremal_rows_pass():
    assert all(row.passed for row in extremal_rows())


@pytest.mark.slow
def test_corpus_slice_rows_pass():
    assert all(row.passed for row in structure_rows(0, 0, 12))
    assert all(row.passed for row in main_procedure_rows(0, Config().eps, 0, 12))


@pytest.mark.slow
def test_bench_tasks_cover_corpus():
    tasks = bench_tasks(0, Config())
    names = [task.name for task in tasks]
    assert names[:4] == ["config", "extremal", "greedy", "selectors"]
    assert "main-0" in names
    assert len(full_corpus(0)) > 300


def test_run_bench_concatenates_in_order():
    tasks = [
        Task("first", interval_rows, (0, 1)),
        Task("second", identity_rows, (0, 0, 1)),
    ]
    rows = run_bench(tasks, workers=1)
    assert [row.instance for row in rows[:2]] == ["c5", "p4-strip"]
    assert rows[-1].check == "degree_identity"
