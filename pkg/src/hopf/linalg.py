"""Exact Gauss-Jordan elimination over a FieldContext."""
import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Mapping, Optional, Sequence

from src.errors import BasisTooLarge, NoSolution
from src.scalar.field import FieldContext, Scalar

logger = logging.getLogger(__name__)

Row = Dict[Hashable, Scalar]


@dataclass
class LinearSolution:
    values: Dict[Hashable, Scalar]
    rank: int
    free: List[Hashable] = field(default_factory=list)

    @property
    def unique(self) -> bool:
        return not self.free


def solve_linear_system(
    ctx: FieldContext,
    equations: Sequence[Mapping[Hashable, Scalar]],
    rhs: Sequence[Scalar],
    unknowns: Sequence[Hashable],
    limit: Optional[int] = None,
) -> LinearSolution:
    """Solve sum(row[x] * x) = rhs for every row.

    Rows are sparse maps from unknown to coefficient. Free unknowns are set to
    zero. Raises NoSolution when the system is inconsistent.
    """
    if limit is not None and len(unknowns) > limit:
        raise BasisTooLarge(f"{len(unknowns)} unknowns exceed the limit of {limit}")
    order = {u: i for i, u in enumerate(unknowns)}
    rows: List[Row] = []
    for equation, value in zip(equations, rhs):
        row = {u: c for u, c in equation.items() if c}
        for u in row:
            if u not in order:
                raise KeyError(f"equation mentions undeclared unknown {u!r}")
        if value:
            row[None] = value
        if row:
            rows.append(row)

    pivots: Dict[Hashable, Row] = {}
    for row in rows:
        # eliminate existing pivots from the incoming row
        for unknown, pivot_row in pivots.items():
            coeff = row.get(unknown)
            if coeff:
                _axpy(row, pivot_row, -coeff)
        live = [u for u in row if u is not None]
        if not live:
            if row.get(None):
                raise NoSolution("inconsistent linear system")
            continue
        unknown = min(live, key=order.__getitem__)
        inverse = row[unknown].inverse()
        for key in list(row):
            row[key] = row[key] * inverse
        for other in pivots.values():
            coeff = other.get(unknown)
            if coeff:
                _axpy(other, row, -coeff)
        pivots[unknown] = row

    values: Dict[Hashable, Scalar] = {u: ctx.zero for u in unknowns}
    for unknown, row in pivots.items():
        values[unknown] = row.get(None, ctx.zero)
    free = [u for u in unknowns if u not in pivots]
    logger.debug("solved %d equations in %d unknowns (rank %d)", len(rows), len(unknowns), len(pivots))
    return LinearSolution(values, len(pivots), free)


def _axpy(target: Row, source: Row, factor: Scalar) -> None:
    for key, value in source.items():
        updated = target.get(key, None)
        product = value * factor
        total = product if updated is None else updated + product
        if total:
            target[key] = total
        else:
            target.pop(key, None)
