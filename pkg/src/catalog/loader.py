"""Reader for `.pres` presentation files.

A file is a sequence of `[section]` blocks holding `key = value` or
`lhs -> rhs` lines; `#` starts a comment. Expressions use the shared syntax
(`%` for tensors, `S(...)` for the host antipode inside coactions).
"""
import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.braided.braiding import ExplicitBraiding
from src.braided.coaction import Action, Coaction, Direction
from src.errors import ParseError, UnknownName
from src.freealg.expr import PolyEvaluator
from src.freealg.presentation import Presentation, free_presentation
from src.freealg.terms import Terms, Word, add_into
from src.hopf.hopf_data import HopfData
from src.hopf.quasitriangular import QuasitriangularElement
from src.hopf.tensor import TensorElem, TensorTerms
from src.scalar.field import FieldContext, Scalar
from src.scalar.syntax import split_assignment, split_identifier

logger = logging.getLogger(__name__)

SECTIONS = (
    "meta",
    "generators",
    "relations",
    "defines",
    "inverses",
    "central",
    "grading",
    "coproduct",
    "counit",
    "antipode",
    "antipode_solve",
    "dqs",
    "dqs_inverse",
    "cocycle",
    "quasitriangular",
    "coaction",
    "action",
    "braiding",
)


@dataclass(frozen=True)
class Line:
    number: int
    text: str


@dataclass
class PresFile:
    """Raw sections of one presentation file."""

    source: str
    sections: Dict[str, List[Line]] = field(default_factory=dict)
    header_lines: Dict[str, int] = field(default_factory=dict)

    def has(self, section: str) -> bool:
        return section in self.sections

    def lines(self, section: str) -> List[Line]:
        return self.sections.get(section, [])

    def meta(self, key: str, default: Optional[str] = None) -> Optional[str]:
        for line in self.lines("meta"):
            if "=" not in line.text:
                raise self.error("expected `key = value`", line, 1)
            lhs, _, rhs = split_assignment(line.text, ("=",))
            if lhs == key:
                return rhs
        return default

    def error(self, message: str, line: Optional[Line] = None, column: int = 0) -> ParseError:
        number = line.number if line else 0
        return ParseError(message, number, column, self.source)


def parse_pres_text(text: str, source: str = "<string>") -> PresFile:
    doc = PresFile(source)
    current: Optional[str] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        if not content.strip():
            continue
        stripped = content.strip()
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ParseError("unterminated section header", number, len(content), source)
            name = stripped[1:-1].strip().lower()
            if name not in SECTIONS:
                raise ParseError(f"unknown section [{name}]", number, content.index("[") + 1, source)
            if name in doc.sections:
                raise ParseError(f"duplicate section [{name}]", number, 1, source)
            doc.sections[name] = []
            doc.header_lines[name] = number
            current = name
            continue
        if current is None:
            raise ParseError("content before the first section header", number, 1, source)
        doc.sections[current].append(Line(number, stripped))
    return doc


def read_pres_file(path: Path) -> PresFile:
    return parse_pres_text(Path(path).read_text(encoding="utf-8"), str(path))


class PresReader:
    """Turns the sections of a PresFile into algebraic objects over one field."""

    def __init__(self, doc: PresFile, ctx: FieldContext):
        self.doc = doc
        self.ctx = ctx

    @contextmanager
    def _located(self, line: Line, text: str = "") -> Iterator[None]:
        """Attach the file line (and column of `text` within it) to parse errors."""
        offset = line.text.find(text) if text else 0
        try:
            yield
        except ParseError as exc:
            column = exc.column + max(offset, 0) if exc.column else 0
            raise ParseError(exc.message, line.number, column, self.doc.source) from None
        except UnknownName as exc:
            raise ParseError(str(exc), line.number, 0, self.doc.source) from None

    def _assignment(self, line: Line, separators: Tuple[str, ...] = ("->", "=")) -> Tuple[str, str, str]:
        try:
            return split_assignment(line.text, separators)
        except ParseError as exc:
            raise self.doc.error(exc.message, line, 1) from None

    # -- presentation -----------------------------------------------------------------

    def generators(self) -> List[str]:
        names: List[str] = []
        for line in self.doc.lines("generators"):
            for token in line.text.replace(",", " ").split():
                if not token.isidentifier() or token == "q":
                    raise self.doc.error(f"invalid generator name {token!r}", line, line.text.find(token) + 1)
                if token in names:
                    raise self.doc.error(f"duplicate generator {token!r}", line, line.text.find(token) + 1)
                names.append(token)
        return names

    def _single_word(self, free: Presentation, text: str, line: Line) -> Word:
        parts = split_identifier(text.replace("*", "").replace(" ", ""), free.generators)
        if not parts:
            raise self.doc.error(f"{text!r} is not a monomial in the generators", line, 1)
        return tuple(free.index[p] for p in parts)

    def presentation(self) -> Tuple[Presentation, Dict[int, Terms]]:
        """The oriented presentation and the defining polynomials of defined generators."""
        name = self.doc.meta("name") or Path(self.doc.source).stem
        gens = self.generators()
        free = free_presentation(name, gens, self.ctx)
        evaluator = PolyEvaluator(self.ctx, [free])
        one = self.ctx.one
        relations: List[Tuple[Terms, Optional[Word]]] = []

        for line in self.doc.lines("relations"):
            lhs, sep, rhs = self._assignment(line)
            with self._located(line, lhs):
                left = evaluator.polynomial(lhs).terms
            with self._located(line, rhs):
                right = evaluator.polynomial(rhs).terms
            relation = dict(left)
            add_into(relation, right, -one)
            stated = self._single_word(free, lhs, line) if sep == "->" else None
            relations.append((relation, stated))

        defines: Dict[int, Terms] = {}
        for line in self.doc.lines("defines"):
            lhs, _, rhs = self._assignment(line, ("=",))
            if lhs not in free.index:
                raise self.doc.error(f"{lhs!r} is not a generator", line, 1)
            with self._located(line, rhs):
                body = evaluator.polynomial(rhs).terms
            letter = free.index[lhs]
            if any(letter in word for word in body):
                raise self.doc.error(f"{lhs} appears in its own definition", line, 1)
            defines[letter] = body
            relation = {(letter,): one}
            add_into(relation, body, -one)
            relations.append((relation, None))

        inverse_pairs: List[Tuple[str, str]] = []
        for line in self.doc.lines("inverses"):
            tokens = line.text.split()
            if len(tokens) != 2 or any(t not in free.index for t in tokens):
                raise self.doc.error("expected two generator names", line, 1)
            g, gi = (free.index[t] for t in tokens)
            inverse_pairs.append((tokens[0], tokens[1]))
            for word in ((g, gi), (gi, g)):
                relations.append(({word: one, (): -one}, None))

        seen = set()
        for line in self.doc.lines("central"):
            for token in line.text.split():
                if token not in free.index:
                    raise self.doc.error(f"{token!r} is not a generator", line, line.text.find(token) + 1)
                g = free.index[token]
                for x in range(len(gens)):
                    pair = frozenset((g, x))
                    if x == g or pair in seen:
                        continue
                    seen.add(pair)
                    relations.append(({(g, x): one, (x, g): -one}, None))

        grading: Dict[str, int] = {}
        for line in self.doc.lines("grading"):
            lhs, _, rhs = self._assignment(line, ("=",))
            try:
                grading[lhs] = int(rhs)
            except ValueError:
                raise self.doc.error(f"grade of {lhs} must be an integer", line, 1) from None

        pres = Presentation.oriented(name, gens, self.ctx, relations, grading, inverse_pairs)
        logger.debug("%s: %d generators, %d rules", name, len(gens), len(pres.rules))
        return pres, defines

    # -- generator tables ---------------------------------------------------------------

    def _table_lines(self, section: str, pres: Presentation) -> Iterator[Tuple[Line, int, str]]:
        for line in self.doc.lines(section):
            lhs, _, rhs = self._assignment(line, ("=",))
            if lhs not in pres.index:
                raise self.doc.error(f"{lhs!r} is not a generator of {pres.name}", line, 1)
            yield line, pres.index[lhs], rhs

    def _require_all(self, section: str, pres: Presentation, table: Dict[int, object]) -> None:
        missing = [pres.generators[g] for g in range(len(pres.generators)) if g not in table]
        if missing:
            line = Line(self.doc.header_lines.get(section, 0), "")
            raise self.doc.error(f"[{section}] gives no entry for {', '.join(missing)}", line)

    def hopf_tables(
        self, pres: Presentation, partial_antipode: bool = False
    ) -> Tuple[Dict[int, TensorTerms], Dict[int, Scalar], Dict[int, Terms]]:
        evaluator = PolyEvaluator(self.ctx, [pres, pres])
        coproduct: Dict[int, TensorTerms] = {}
        for line, g, rhs in self._table_lines("coproduct", pres):
            with self._located(line, rhs):
                coproduct[g] = evaluator.tensor_terms(rhs, 2)
        counit: Dict[int, Scalar] = {}
        single = PolyEvaluator(self.ctx, [pres])
        for line, g, rhs in self._table_lines("counit", pres):
            with self._located(line, rhs):
                counit[g] = single.scalar(rhs)
        antipode: Dict[int, Terms] = {}
        for line, g, rhs in self._table_lines("antipode", pres):
            with self._located(line, rhs):
                antipode[g] = single.polynomial(rhs).terms
        self._require_all("coproduct", pres, coproduct)
        self._require_all("counit", pres, counit)
        if not partial_antipode:
            self._require_all("antipode", pres, antipode)
        return coproduct, counit, antipode

    def hopf(self, pres: Presentation) -> HopfData:
        coproduct, counit, antipode = self.hopf_tables(pres)
        return HopfData(pres, coproduct, counit, antipode)

    # -- attachments ------------------------------------------------------------------

    def _direction(self, section: str) -> Tuple[Direction, List[Line]]:
        lines = self.doc.lines(section)
        direction = Direction.RIGHT if section == "coaction" else Direction.LEFT
        rest = []
        for line in lines:
            lhs, _, rhs = self._assignment(line, ("=",))
            if lhs == "direction":
                try:
                    direction = Direction(rhs.lower())
                except ValueError:
                    raise self.doc.error(f"direction must be left or right, got {rhs!r}", line, 1) from None
            else:
                rest.append(line)
        return direction, rest

    @staticmethod
    def host_functions(host: HopfData):
        return {"S": {host.pres.name: host.antipode_word}}

    def coaction(self, host: HopfData, carrier: Presentation) -> Optional[Coaction]:
        if not self.doc.has("coaction"):
            return None
        direction, lines = self._direction("coaction")
        slots = [carrier, host.pres] if direction is Direction.RIGHT else [host.pres, carrier]
        evaluator = PolyEvaluator(self.ctx, slots, self.host_functions(host))
        table: Dict[int, TensorTerms] = {}
        for line in lines:
            lhs, _, rhs = self._assignment(line, ("=",))
            if lhs not in carrier.index:
                raise self.doc.error(f"{lhs!r} is not a generator of {carrier.name}", line, 1)
            with self._located(line, rhs):
                table[carrier.index[lhs]] = evaluator.tensor_terms(rhs, 2)
        self._require_all("coaction", carrier, table)
        return Coaction(direction, host, carrier, table)

    def action(self, host: HopfData, carrier: Presentation) -> Optional[Action]:
        if not self.doc.has("action"):
            return None
        direction, lines = self._direction("action")
        evaluator = PolyEvaluator(self.ctx, [carrier])
        table: Dict[Tuple[Word, int], Terms] = {}
        for line in lines:
            lhs, _, rhs = self._assignment(line, ("=",))
            tokens = lhs.split()
            if len(tokens) != 2:
                raise self.doc.error("expected `<host word> <carrier generator> = ...`", line, 1)
            parts = split_identifier(tokens[0], host.pres.generators)
            if not parts:
                raise self.doc.error(f"{tokens[0]!r} is not a word of {host.name}", line, 1)
            if tokens[1] not in carrier.index:
                raise self.doc.error(f"{tokens[1]!r} is not a generator of {carrier.name}", line, 1)
            with self._located(line, rhs):
                body = evaluator.polynomial(rhs).terms
            table[(tuple(host.pres.index[p] for p in parts), carrier.index[tokens[1]])] = body
        return Action(direction, host, carrier, table)

    def pair_table(self, section: str, host: HopfData) -> Dict[Tuple[int, int], Scalar]:
        """Lines `g h = scalar` giving a bilinear form on generator pairs."""
        evaluator = PolyEvaluator(self.ctx, [host.pres])
        table: Dict[Tuple[int, int], Scalar] = {}
        for line in self.doc.lines(section):
            lhs, _, rhs = self._assignment(line, ("=",))
            tokens = lhs.split()
            if tokens and tokens[0] in ("derive", "anchor"):
                continue
            if len(tokens) != 2 or any(t not in host.pres.index for t in tokens):
                raise self.doc.error(f"expected two generators of {host.name}", line, 1)
            with self._located(line, rhs):
                table[(host.pres.index[tokens[0]], host.pres.index[tokens[1]])] = evaluator.scalar(rhs)
        return table

    def derive_source(self) -> Optional[str]:
        for line in self.doc.lines("dqs"):
            lhs, _, rhs = self._assignment(line, ("=",))
            if lhs == "derive":
                return rhs
        return None

    def anchors(self, host: HopfData) -> List[Tuple[str, str, Scalar]]:
        """`anchor g h = value` lines: entries a derived form must reproduce."""
        evaluator = PolyEvaluator(self.ctx, [host.pres])
        anchors = []
        for line in self.doc.lines("dqs"):
            lhs, _, rhs = self._assignment(line, ("=",))
            tokens = lhs.split()
            if tokens and tokens[0] == "anchor":
                if len(tokens) != 3 or any(t not in host.pres.index for t in tokens[1:]):
                    raise self.doc.error("expected `anchor <gen> <gen> = value`", line, 1)
                with self._located(line, rhs):
                    anchors.append((tokens[1], tokens[2], evaluator.scalar(rhs)))
        return anchors

    def quasitriangular(self, host: HopfData) -> Optional[QuasitriangularElement]:
        if not self.doc.has("quasitriangular"):
            return None
        evaluator = PolyEvaluator(self.ctx, [host.pres, host.pres])
        element: Optional[TensorElem] = None
        for line in self.doc.lines("quasitriangular"):
            lhs, _, rhs = self._assignment(line, ("=",))
            with self._located(line, rhs):
                element = TensorElem((host.pres, host.pres), evaluator.tensor_terms(rhs, 2))
        if element is None:
            raise self.doc.error("[quasitriangular] is empty", Line(self.doc.header_lines["quasitriangular"], ""))
        return QuasitriangularElement(host, element)

    def braiding_table(self, carrier: Presentation) -> Dict[Tuple[int, int], TensorTerms]:
        """Lines `v w = expr`, expr in the output order w⊗v."""
        evaluator = PolyEvaluator(self.ctx, [carrier, carrier])
        table: Dict[Tuple[int, int], TensorTerms] = {}
        for line in self.doc.lines("braiding"):
            lhs, _, rhs = self._assignment(line, ("=",))
            tokens = lhs.split()
            if len(tokens) != 2 or any(t not in carrier.index for t in tokens):
                raise self.doc.error(f"expected two generators of {carrier.name}", line, 1)
            with self._located(line, rhs):
                table[(carrier.index[tokens[0]], carrier.index[tokens[1]])] = evaluator.tensor_terms(rhs, 2)
        return table

    def explicit_braiding(self, carrier: Presentation) -> Optional[ExplicitBraiding]:
        if not self.doc.has("braiding"):
            return None
        return ExplicitBraiding(carrier, carrier, self.braiding_table(carrier), name=f"stated Ψ on {carrier.name}")

    def antipode_solve(self) -> Optional[Dict[str, Sequence[str]]]:
        if not self.doc.has("antipode_solve"):
            return None
        settings: Dict[str, Sequence[str]] = {}
        for line in self.doc.lines("antipode_solve"):
            lhs, _, rhs = self._assignment(line, ("=",))
            settings[lhs] = rhs.split()
        for key in ("matrix", "factor"):
            if key not in settings:
                raise self.doc.error(f"[antipode_solve] needs `{key} = ...`",
                                     Line(self.doc.header_lines["antipode_solve"], ""))
        if len(settings["matrix"]) != 4 or len(settings["factor"]) != 1:
            raise self.doc.error("[antipode_solve] takes a 2x2 matrix and one factor",
                                 Line(self.doc.header_lines["antipode_solve"], ""))
        return settings
