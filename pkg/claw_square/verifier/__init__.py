# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from .rows import CheckRow, rows_to_csv, summarize, write_rows  # isort:skip
from .bounds import (
    ConjectureReport,
    IntervalBound,
    check_conjecture_and_diameter2,
    check_dichotomy,
    check_interval_bounds,
    check_lemma_cliquesecond,
    max_square_degree_bound,
    two_path_rows,
)
from .config import Config
from .extremal import (
    Branch,
    CgttVerdict,
    blowup_table_rows,
    check_cgtt,
    check_cgtt_exhaustive,
    extremal_square_rows,
    is_2k2_free,
    small_2k2_free_multigraphs,
)
from .sparsity import (
    IdentityValues,
    LineSquare,
    SparsityReport,
    edge_square_degree_identity,
    sparsity_report,
    sparsity_reports,
)

__all__ = [
    "CheckRow",
    "rows_to_csv",
    "summarize",
    "write_rows",
    "ConjectureReport",
    "IntervalBound",
    "check_conjecture_and_diameter2",
    "check_dichotomy",
    "check_interval_bounds",
    "check_lemma_cliquesecond",
    "max_square_degree_bound",
    "two_path_rows",
    "Config",
    "Branch",
    "CgttVerdict",
    "blowup_table_rows",
    "check_cgtt",
    "check_cgtt_exhaustive",
    "extremal_square_rows",
    "is_2k2_free",
    "small_2k2_free_multigraphs",
    "IdentityValues",
    "LineSquare",
    "SparsityReport",
    "edge_square_degree_identity",
    "sparsity_report",
    "sparsity_reports",
]
