# This file is part of Claw_Square. See the main.py file for more details.
# Copyright (C) 2024  Numerlor

from __future__ import annotations

import dataclasses
import logging
import typing as t
from fractions import Fraction

from claw_square import settings
from claw_square.constants import (
    DEFAULT_DELTA0,
    DEFAULT_EPS,
    DEFAULT_EPS1,
    DEFAULT_EPS2,
    DEFAULT_EPS3,
    MAX_EPS,
)
from claw_square.errors import PreconditionError
from claw_square.search import SolverBudget
from claw_square.verifier.rows import CheckRow

if t.TYPE_CHECKING:
    import typing_extensions as te

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, slots=True)
class Config:
    """
    Constants of the colouring procedure and of the neighbourhood sparsity analysis.

    `eps` sizes the palette, `eps1`, `eps2`, `eps3` split edges into the three sparsity cases
    and `delta0` is the degree from which sparsity ratios are reported against ``1 - eps``.
    """

    eps: Fraction = DEFAULT_EPS
    eps1: Fraction = DEFAULT_EPS1
    eps2: Fraction = DEFAULT_EPS2
    eps3: Fraction = DEFAULT_EPS3
    delta0: int = DEFAULT_DELTA0
    budget: SolverBudget = SolverBudget()

    def __post_init__(self):
        if not 0 < self.eps <= MAX_EPS:
            raise PreconditionError(f"eps must lie in (0, {MAX_EPS}], got {self.eps}.")
        for name in ("eps1", "eps2", "eps3"):
            if getattr(self, name) <= 0:
                raise PreconditionError(f"{name} must be positive.")
        if self.eps3 >= 1:
            raise PreconditionError(f"eps3 must be below 1, got {self.eps3}.")
        failing = [row.check for row in self.feasibility_rows() if not row.passed]
        if failing:
            raise PreconditionError(f"Infeasible sparsity constants: {', '.join(failing)}.")

    @classmethod
    def from_settings(cls) -> te.Self:
        """Snapshot the `Bounds` and `Solver` settings categories."""
        return cls(
            settings.Bounds.eps,
            settings.Bounds.eps1,
            settings.Bounds.eps2,
            settings.Bounds.eps3,
            settings.Bounds.delta0,
            SolverBudget(
                settings.Solver.max_exact_vertices, settings.Solver.max_search_nodes
            ),
        )

    def replace(self, **changes: t.Any) -> te.Self:
        """Return a copy with `changes` applied, None values are ignored."""
        return dataclasses.replace(
            self, **{key: value for key, value in changes.items() if value is not None}
        )

    def feasibility_rows(self, instance: str = "config") -> list[CheckRow]:
        """
        Check the two constraints the sparsity constants have to meet.

        ``-2ε₁ + ε₁²/2 < 0`` and ``1 - ε₁ - ε₂/(2(1-ε₃)) > 0``.
        """
        return [
            CheckRow.compare(
                instance, "eps1_quadratic", -2 * self.eps1 + self.eps1**2 / 2, "<", 0
            ),
            CheckRow.compare(
                instance,
                "eps_walk_balance",
                1 - self.eps1 - self.eps2 / (2 * (1 - self.eps3)),
                ">",
                0,
            ),
        ]
