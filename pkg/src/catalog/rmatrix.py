"""Structure data solved from linear conditions rather than transcribed."""
import logging
from typing import Dict, List, Mapping, Sequence, Tuple

from src.braided.coaction import Coaction, Direction
from src.errors import ConfigError, NoSolution
from src.freealg.presentation import Presentation
from src.freealg.terms import Terms, Word, accumulate
from src.hopf.functionals import DQSFunctional, Law, complete_grouplike_entries
from src.hopf.hopf_data import HopfData
from src.hopf.linalg import solve_linear_system
from src.hopf.tensor import TensorTerms
from src.scalar.field import Scalar

logger = logging.getLogger(__name__)

Unknown = Tuple[int, int]


def _host_letter(word: Word, coaction: Coaction) -> int:
    if len(word) != 1:
        raise NoSolution(f"{coaction.name} is not linear in the host generators")
    return word[0]


def derive_rmatrix(
    host: HopfData,
    coaction: Coaction,
    braiding_table: Mapping[Tuple[int, int], TensorTerms],
    defines: Mapping[int, Terms] = None,
    inverse_pairs: Sequence[Tuple[int, int]] = (),
    anchors: Sequence[Tuple[str, str, Scalar]] = (),
    limit: int = None,
) -> DQSFunctional:
    """Solve R on host generator pairs from a stated braiding of a right comodule.

    Each stated entry Ψ(v⊗w) must equal w⁽¹⁾⊗v⁽¹⁾R(v⁽²⁾⊗w⁽²⁾); with a coaction
    linear in the host generators this is a linear system in R(g⊗h). Entries on
    defined and inverse generators are completed afterwards, and every anchor
    entry is checked against the completed table.
    """
    if coaction.direction is not Direction.RIGHT:
        raise ConfigError("R is derived from a right coaction")
    letters = sorted({
        _host_letter(host_leg, coaction)
        for g in range(len(coaction.carrier.generators))
        for _, host_leg, _ in coaction.split((g,))
    })
    unknowns: List[Unknown] = [(i, j) for i in letters for j in letters]

    equations: List[Dict[Unknown, Scalar]] = []
    rhs: List[Scalar] = []
    for (v, w), stated in sorted(braiding_table.items()):
        rows: Dict[Tuple[Word, Word], Dict[Unknown, Scalar]] = {}
        w_legs = list(coaction.split((w,)))
        for v1, v2, vc in coaction.split((v,)):
            for w1, w2, wc in w_legs:
                row = rows.setdefault((w1, v1), {})
                accumulate(row, (v2[0], w2[0]), vc * wc)
        for key in sorted(set(rows) | set(stated)):
            equations.append(rows.get(key, {}))
            rhs.append(stated.get(key, host.ctx.zero))

    solution = solve_linear_system(host.ctx, equations, rhs, unknowns, limit=limit)
    if solution.free:
        names = [f"{host.pres.generators[i]}⊗{host.pres.generators[j]}" for i, j in solution.free]
        raise NoSolution(f"stated braiding leaves R undetermined on {', '.join(names)}")
    table = {k: v for k, v in solution.values.items() if v}
    logger.info("derived %d nonzero R entries on %s from %s", len(table), host.name, coaction.carrier.name)

    table = complete_grouplike_entries(host, table, Law.FORWARD, Law.REVERSE, defines or {}, inverse_pairs)
    R = DQSFunctional(host, table, name="R")
    check_anchors(R, anchors)
    return R


def check_anchors(R: DQSFunctional, anchors: Sequence[Tuple[str, str, Scalar]]) -> None:
    for left, right, expected in anchors:
        got = R.entry(left, right)
        if got != expected:
            raise NoSolution(f"R({left}⊗{right}) = {got}, expected {expected}")


def solve_matrix_antipode(
    pres: Presentation, matrix: Sequence[str], factor: str, limit: int = None
) -> Dict[int, Terms]:
    """Antipode of a 2x2 generator matrix u with S̲u_ij linear in u times `factor`.

    Solves Σ_k S̲(u_ik)u_kj = δ_ij = Σ_k u_ik S̲(u_kj) coefficient by coefficient
    in normal form. Both identities are plain products, since Δ̲u = u⊗u.
    """
    ctx = pres.ctx
    u = [[pres.gen(matrix[0]), pres.gen(matrix[1])], [pres.gen(matrix[2]), pres.gen(matrix[3])]]
    entries = [u[0][0], u[0][1], u[1][0], u[1][1]]
    f = pres.gen(factor)
    unknowns = [(g, l) for g in entries for l in entries]

    equations: Dict[Tuple[str, int, int, Word], Dict[Unknown, Scalar]] = {}
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in entries:
                    # S̲(u_ik)u_kj: c[(u_ik, l)] · l f u_kj
                    for word, c in pres.reduce_word((l, f, u[k][j])).items():
                        accumulate(equations.setdefault(("left", i, j, word), {}), (u[i][k], l), c)
                    # u_ik S̲(u_kj): c[(u_kj, l)] · u_ik l f
                    for word, c in pres.reduce_word((u[i][k], l, f)).items():
                        accumulate(equations.setdefault(("right", i, j, word), {}), (u[k][j], l), c)
    keys = sorted(equations, key=lambda k: (k[0], k[1], k[2], len(k[3]), k[3]))
    for side in ("left", "right"):
        for i in range(2):
            key = (side, i, i, ())
            if key not in equations:
                equations[key] = {}
                keys.append(key)
    rows = [equations[k] for k in keys]
    values = [ctx.one if k[1] == k[2] and k[3] == () else ctx.zero for k in keys]
    solution = solve_linear_system(ctx, rows, values, unknowns, limit=limit)
    if solution.free:
        logger.debug("%s: antipode ansatz has %d free coefficients, set to zero", pres.name, len(solution.free))

    result: Dict[int, Terms] = {}
    for g in entries:
        terms: Terms = {}
        for l in entries:
            value = solution.values[(g, l)]
            if value:
                for word, c in pres.reduce_word((l, f)).items():
                    accumulate(terms, word, value * c)
        result[g] = terms
    logger.info("%s: solved matrix antipode on %s", pres.name, " ".join(matrix))
    return result
