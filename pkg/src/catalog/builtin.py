"""Built-in catalog of presentations, loaded from `catalog/*.pres` files."""
import json
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.braided.braided_hopf import BraidedHopfData
from src.braided.braiding import (
    BraidingSource,
    ExplicitBraiding,
    LeftComoduleBraiding,
    LeftModuleBraiding,
    RightComoduleBraiding,
    RightModuleBraiding,
)
from src.braided.coaction import Action, Coaction, Direction
from src.catalog.config import SessionConfig
from src.catalog.loader import PresFile, PresReader, parse_pres_text, read_pres_file
from src.catalog.rmatrix import check_anchors, derive_rmatrix, solve_matrix_antipode
from src.errors import CoverageGap, FieldMismatch, ParseError, UnknownName, VerificationFailed
from src.freealg.presentation import Presentation
from src.freealg.terms import Terms
from src.hopf.functionals import Cocycle, DQSFunctional, Law, complete_grouplike_entries
from src.hopf.hopf_data import HopfData
from src.hopf.quasitriangular import QuasitriangularElement
from src.scalar.field import FieldContext
from src.verify.suites import verify_bundle

logger = logging.getLogger(__name__)

HOPF = "hopf"
BRAIDED = "braided"

_ANYONIC = re.compile(r"^anyonic\((\d+)\)$")
_GROUP_BICHAR = re.compile(r"^group_bichar\((\d+),(\d+),(.+)\)$")


@dataclass(frozen=True)
class Bundle:
    """One catalog entry with every structure attached to it."""

    name: str
    kind: str
    pres: Presentation
    hopf: Optional[HopfData] = None
    braided: Optional[BraidedHopfData] = None
    host: Optional["Bundle"] = None
    R: Optional[DQSFunctional] = None
    cocycle: Optional[Cocycle] = None
    quasitriangular: Optional[QuasitriangularElement] = None
    coaction: Optional[Coaction] = None
    action: Optional[Action] = None
    explicit_braiding: Optional[ExplicitBraiding] = None
    defines: Mapping[int, Terms] = field(default_factory=dict)
    description: str = ""
    source: str = ""

    @property
    def ctx(self) -> FieldContext:
        return self.pres.ctx

    @property
    def structure(self):
        return self.hopf if self.kind == HOPF else self.braided

    @property
    def host_hopf(self) -> Optional[HopfData]:
        return self.host.hopf if self.host else None

    def inverse_pairs(self) -> List[Tuple[int, int]]:
        return [(self.pres.gen(a), self.pres.gen(b)) for a, b in self.pres.inverse_pairs]

    def require(self, attribute: str):
        value = getattr(self, attribute)
        if value is None:
            raise CoverageGap(f"{self.name} carries no {attribute}")
        return value


# -- parameterized families -----------------------------------------------------------


def anyonic_text(n: int) -> str:
    """Z/n with generator g and R(g^a⊗g^b) = q^(ab), q a primitive n-th root of unity."""
    if n < 1:
        raise UnknownName(f"anyonic({n}) needs n >= 1")
    power = " * ".join(["g"] * (n - 1)) or "1"
    relation = "g = 1" if n == 1 else f"g^{n} = 1"
    return "\n".join([
        "[meta]",
        f"name = anyonic({n})",
        "kind = hopf",
        f"field = cyclotomic:{n}",
        "description = anyonic group algebra of Z/n",
        "[generators]",
        "g",
        "[relations]",
        relation,
        "[coproduct]",
        "g = g % g",
        "[counit]",
        "g = 1",
        "[antipode]",
        f"g = {power}",
        "[dqs]",
        "g g = q",
        "",
    ])


def canonical_form(omega: Sequence[Sequence[int]]) -> str:
    return json.dumps([list(row) for row in omega], separators=(",", ":"))


def group_bichar_text(m: int, n: int, omega: Sequence[Sequence[int]]) -> str:
    """(Z/m)^n with R(g_i⊗g_j) = q^ω_ij, q a primitive m-th root of unity."""
    if m < 1 or n < 1:
        raise UnknownName(f"group_bichar({m},{n},...) needs m, n >= 1")
    if len(omega) != n or any(len(row) != n for row in omega):
        raise UnknownName(f"group_bichar form must be {n}x{n}")
    gens = [f"g{i + 1}" for i in range(n)]
    lines = [
        "[meta]",
        f"name = group_bichar({m},{n},{canonical_form(omega)})",
        "kind = hopf",
        f"field = cyclotomic:{m}",
        "description = group algebra of (Z/m)^n with a bicharacter",
        "[generators]",
        " ".join(gens),
        "[relations]",
    ]
    for i, g in enumerate(gens):
        lines.append(f"{g} = 1" if m == 1 else f"{g}^{m} = 1")
        for h in gens[i + 1:]:
            lines.append(f"{h} * {g} = {g} * {h}")
    lines.append("[coproduct]")
    lines.extend(f"{g} = {g} % {g}" for g in gens)
    lines.append("[counit]")
    lines.extend(f"{g} = 1" for g in gens)
    lines.append("[antipode]")
    for g in gens:
        lines.append(f"{g} = " + (" * ".join([g] * (m - 1)) or "1"))
    lines.append("[dqs]")
    for i, g in enumerate(gens):
        for j, h in enumerate(gens):
            lines.append(f"{g} {h} = q^{int(omega[i][j]) % m}")
    lines.append("")
    return "\n".join(lines)


def normalize_name(name: str) -> str:
    return re.sub(r"\s+", "", name)


def bichar_parameters(name: str) -> Optional[Tuple[int, int, List[List[int]]]]:
    """(m, n, ω) of a `group_bichar(m,n,ω)` name, else None."""
    match = _GROUP_BICHAR.match(normalize_name(name))
    if not match:
        return None
    m, n = int(match.group(1)), int(match.group(2))
    try:
        omega = json.loads(match.group(3))
    except json.JSONDecodeError:
        raise UnknownName(f"bad bicharacter form in {name!r}") from None
    if isinstance(omega, int):
        omega = [[omega]]
    if not isinstance(omega, list) or not all(isinstance(row, list) for row in omega):
        raise UnknownName(f"bad bicharacter form in {name!r}")
    return m, n, omega


def _parse_family(name: str) -> Optional[Tuple[str, str]]:
    """(canonical name, file text) for a parameterized name, else None."""
    match = _ANYONIC.match(name)
    if match:
        n = int(match.group(1))
        return f"anyonic({n})", anyonic_text(n)
    parameters = bichar_parameters(name)
    if parameters is not None:
        m, n, omega = parameters
        return f"group_bichar({m},{n},{canonical_form(omega)})", group_bichar_text(m, n, omega)
    return None


# -- the catalog ------------------------------------------------------------------------


class Catalog:
    """Loads, caches and (optionally) verifies built-in bundles.

    Bundles are keyed by name and field context. A host whose R-matrix is
    derived from one of its comodules is assembled in stages: the host Hopf
    algebra first, then the comodule's coaction and stated braiding over it,
    then the solved R.
    """

    def __init__(self, config: Optional[SessionConfig] = None, verify: bool = True):
        self.config = config or SessionConfig()
        self.verify = verify
        self._cache: Dict[Tuple[str, FieldContext], Bundle] = {}
        self.reports: Dict[Tuple[str, FieldContext], object] = {}

    # -- names and files ----------------------------------------------------------------

    @property
    def directory(self) -> Path:
        return Path(self.config.catalog_dir)

    def names(self) -> List[str]:
        return sorted(path.stem for path in self.directory.glob("*.pres"))

    def _document(self, name: str) -> Tuple[str, PresFile]:
        name = normalize_name(name)
        family = _parse_family(name)
        if family is not None:
            canonical, text = family
            return canonical, parse_pres_text(text, f"catalog:{canonical}")
        path = self.directory / f"{name}.pres"
        if not path.is_file():
            raise UnknownName(f"no catalog entry named {name!r} (known: {', '.join(self.names())}, "
                              "anyonic(n), group_bichar(m,n,omega))")
        return name, parse_pres_text(path.read_text(encoding="utf-8"), str(path))

    def default_field(self, name: str) -> FieldContext:
        _, doc = self._document(name)
        stated = doc.meta("field", "any")
        if stated == "any":
            return FieldContext.transcendental()
        return FieldContext.from_text(stated)

    def describe(self) -> List[Dict[str, str]]:
        """Name, kind, host and field of every file-backed entry."""
        rows = []
        for name in self.names():
            _, doc = self._document(name)
            rows.append({
                "name": name,
                "kind": doc.meta("kind", HOPF),
                "host": doc.meta("host", "-"),
                "field": doc.meta("field", "any"),
                "description": doc.meta("description", ""),
            })
        return rows

    @staticmethod
    def _check_field(doc: PresFile, name: str, ctx: FieldContext) -> None:
        stated = doc.meta("field", "any")
        if stated == "any":
            return
        if FieldContext.from_text(stated) != ctx:
            raise FieldMismatch(f"{name} lives over {stated}, not over {ctx}")

    # -- loading --------------------------------------------------------------------------

    def meta(self, name: str, key: str, default: Optional[str] = None) -> Optional[str]:
        _, doc = self._document(name)
        return doc.meta(key, default)

    def load(self, name: str, ctx: Optional[FieldContext] = None) -> Bundle:
        canonical, doc = self._document(name)
        if ctx is None:
            ctx = self.default_field(canonical)
        key = (canonical, ctx)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        self._check_field(doc, canonical, ctx)
        bundle = self._build(canonical, doc, ctx)
        if self.verify:
            report = verify_bundle(bundle, self.config)
            self.reports[key] = report
            if not report.ok:
                raise VerificationFailed(f"{canonical} failed its load-time checks", report)
        self._cache[key] = bundle
        logger.info("loaded %s over %s", canonical, ctx)
        return bundle

    def load_path(self, path: Path, ctx: Optional[FieldContext] = None) -> Bundle:
        """Build a bundle from a presentation file outside the catalog directory.

        Hosts named in the file are resolved against the catalog. File bundles
        are not cached.
        """
        doc = read_pres_file(path)
        name = doc.meta("name", Path(path).stem)
        stated = doc.meta("field", "any")
        if ctx is None:
            ctx = FieldContext.transcendental() if stated == "any" else FieldContext.from_text(stated)
        self._check_field(doc, name, ctx)
        bundle = self._build(name, doc, ctx)
        if self.verify:
            report = verify_bundle(bundle, self.config)
            self.reports[(name, ctx)] = report
            if not report.ok:
                raise VerificationFailed(f"{name} failed its load-time checks", report)
        return bundle

    def _build(self, name: str, doc: PresFile, ctx: FieldContext) -> Bundle:
        reader = PresReader(doc, ctx)
        kind = doc.meta("kind", HOPF)
        if kind not in (HOPF, BRAIDED):
            raise ParseError(f"unknown kind {kind!r}", source=doc.source)
        host_name = doc.meta("host")
        host = self.load(host_name, ctx) if host_name else None
        pres, defines = reader.presentation()
        common = dict(
            name=name,
            kind=kind,
            pres=pres,
            host=host,
            defines=defines,
            description=doc.meta("description", ""),
            source=doc.source,
        )
        if kind == HOPF:
            hopf = reader.hopf(pres)
            inverse = [(pres.gen(a), pres.gen(b)) for a, b in pres.inverse_pairs]
            return Bundle(
                hopf=hopf,
                R=self._dqs(reader, hopf, defines, inverse, ctx),
                cocycle=self._cocycle(reader, hopf, defines, inverse),
                quasitriangular=reader.quasitriangular(hopf),
                explicit_braiding=reader.explicit_braiding(pres),
                **common,
            )

        if host is None:
            raise ParseError(f"braided entry {name} names no host", source=doc.source)
        coaction = reader.coaction(host.hopf, pres)
        action = reader.action(host.hopf, pres)
        explicit = reader.explicit_braiding(pres)
        source = self._braiding_source(name, host, coaction, action, explicit)
        settings = reader.antipode_solve()
        coproduct, counit, antipode = reader.hopf_tables(pres, partial_antipode=settings is not None)
        if settings is not None:
            antipode.update(solve_matrix_antipode(
                pres, settings["matrix"], settings["factor"][0], limit=self.config.basis_limit
            ))
            reader._require_all("antipode", pres, antipode)
        braided = BraidedHopfData(pres, coproduct, counit, antipode, source, host.hopf, coaction, action, name)
        return Bundle(braided=braided, coaction=coaction, action=action, explicit_braiding=explicit, **common)

    @staticmethod
    def _braiding_source(
        name: str,
        host: Bundle,
        coaction: Optional[Coaction],
        action: Optional[Action],
        explicit: Optional[ExplicitBraiding],
    ) -> BraidingSource:
        label = f"Ψ on {name}"
        if coaction is not None and host.R is not None:
            if coaction.direction is Direction.RIGHT:
                return RightComoduleBraiding(host.R, coaction, coaction, name=label)
            return LeftComoduleBraiding(host.R, coaction, coaction, name=label)
        if action is not None and host.quasitriangular is not None:
            if action.direction is Direction.LEFT:
                return LeftModuleBraiding(host.quasitriangular, action, action, name=label)
            return RightModuleBraiding(host.quasitriangular, action, action, name=label)
        if explicit is not None:
            return explicit
        raise CoverageGap(f"{name}: no coaction, action or stated braiding to braid with")

    # -- functionals ------------------------------------------------------------------

    def _dqs(
        self,
        reader: PresReader,
        hopf: HopfData,
        defines: Mapping[int, Terms],
        inverse: Sequence[Tuple[int, int]],
        ctx: FieldContext,
    ) -> Optional[DQSFunctional]:
        if not reader.doc.has("dqs"):
            return None
        anchors = reader.anchors(hopf)
        carrier = reader.derive_source()
        if carrier is not None:
            return self._derive_from_comodule(hopf, carrier, ctx, defines, inverse, anchors)
        table = reader.pair_table("dqs", hopf)
        if defines or inverse:
            table = complete_grouplike_entries(hopf, table, Law.FORWARD, Law.REVERSE, defines, inverse)
        inverse_table = reader.pair_table("dqs_inverse", hopf) if reader.doc.has("dqs_inverse") else None
        R = DQSFunctional(hopf, table, inverse_table, name="R")
        check_anchors(R, anchors)
        return R

    def _derive_from_comodule(
        self,
        hopf: HopfData,
        carrier: str,
        ctx: FieldContext,
        defines: Mapping[int, Terms],
        inverse: Sequence[Tuple[int, int]],
        anchors,
    ) -> DQSFunctional:
        _, doc = self._document(carrier)
        reader = PresReader(doc, ctx)
        pres, _ = reader.presentation()
        coaction = reader.coaction(hopf, pres)
        if coaction is None or not doc.has("braiding"):
            raise CoverageGap(f"{carrier} needs a [coaction] and a [braiding] to derive R on {hopf.name}")
        logger.info("deriving R on %s from the stated braiding of %s", hopf.name, carrier)
        return derive_rmatrix(
            hopf, coaction, reader.braiding_table(pres), defines, inverse, anchors, limit=self.config.basis_limit
        )

    @staticmethod
    def _cocycle(
        reader: PresReader, hopf: HopfData, defines: Mapping[int, Terms], inverse: Sequence[Tuple[int, int]]
    ) -> Optional[Cocycle]:
        if not reader.doc.has("cocycle"):
            return None
        table = reader.pair_table("cocycle", hopf)
        if defines or inverse:
            table = complete_grouplike_entries(hopf, table, Law.FORWARD, Law.FORWARD, defines, inverse)
        return Cocycle(hopf, table, name="chi")

    # -- derived data -------------------------------------------------------------------

    def derive_glq2_rmatrix(self, ctx: Optional[FieldContext] = None) -> DQSFunctional:
        """Re-derive R on GL_q(2) from the loaded quantum plane, anchored at R(C⊗C) = q⁶."""
        plane = self.load("aq2", ctx)
        host = plane.host
        if plane.explicit_braiding is None:
            raise CoverageGap("aq2 carries no stated braiding")
        ctx = host.ctx
        return derive_rmatrix(
            host.hopf,
            plane.coaction,
            plane.explicit_braiding.table,
            host.defines,
            host.inverse_pairs(),
            [("C", "C", ctx.q_pow(6))],
            limit=self.config.basis_limit,
        )


def load_builtin(name: str, ctx: Optional[FieldContext] = None, catalog: Optional[Catalog] = None) -> Bundle:
    return (catalog or Catalog()).load(name, ctx)


def derive_glq2_rmatrix(catalog: Optional[Catalog] = None, ctx: Optional[FieldContext] = None) -> DQSFunctional:
    return (catalog or Catalog()).derive_glq2_rmatrix(ctx)


def pair_braiding(left: Bundle, right: Bundle) -> BraidingSource:
    """Ψ: left⊗right from the structure of the host the two bundles share."""
    if left is right and left.braided is not None:
        return left.braided.source
    if left.host is None or right.host is None or left.host.name != right.host.name:
        raise CoverageGap(f"{left.name} and {right.name} do not live over one host")
    host = left.host
    label = f"Ψ on {left.name}⊗{right.name}"
    if left.coaction is not None and right.coaction is not None and host.R is not None:
        direction = left.coaction.direction
        if right.coaction.direction is not direction:
            raise CoverageGap(f"{left.name} and {right.name} coact from opposite sides")
        if direction is Direction.RIGHT:
            return RightComoduleBraiding(host.R, left.coaction, right.coaction, name=label)
        return LeftComoduleBraiding(host.R, left.coaction, right.coaction, name=label)
    if left.action is not None and right.action is not None and host.quasitriangular is not None:
        direction = left.action.direction
        if right.action.direction is not direction:
            raise CoverageGap(f"{left.name} and {right.name} are acted on from opposite sides")
        if direction is Direction.LEFT:
            return LeftModuleBraiding(host.quasitriangular, left.action, right.action, name=label)
        return RightModuleBraiding(host.quasitriangular, left.action, right.action, name=label)
    raise CoverageGap(f"no braiding between {left.name} and {right.name}")
