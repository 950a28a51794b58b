"""Command-line front end.

    braided-groups <command> SOURCE ... [--degree N] [--field F] [--format text|records]

SOURCE is either `catalog:NAME` for a built-in entry (including the
`anyonic(n)` and `group_bichar(m,n,omega)` families) or a path to a `.pres`
file. Exit code 0 means every verification the command ran passed, 1 a failed
verification, 2 a usage, parse or configuration error.
"""
import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import pandas as pd

from src.catalog.builtin import Bundle, Catalog, bichar_parameters, pair_braiding
from src.catalog.config import SessionConfig
from src.constructions.automorphism import automorphism_braided_group
from src.constructions.bosonisation import (
    CARRIER_FIRST,
    HOST_FIRST,
    bosonise_comodule,
    bosonise_left_comodule,
    bosonise_module,
    bosonise_right_module,
    cross_relation_table,
)
from src.constructions.crossed import biproduct, induce_crossed_module
from src.constructions.transmutation import TransmutationReconciler, transmute
from src.constructions.twisting import (
    colour_enveloping_check,
    colour_sqrt_decompose,
    colour_twist,
    exponent_table,
    twist_braided,
)
from src.braided.coaction import Direction
from src.errors import (
    BraidedGroupsError,
    ConfigError,
    CoverageGap,
    FieldMismatch,
    ParseError,
    UnknownName,
    VerificationFailed,
)
from src.freealg.ncpoly import NCPoly
from src.freealg.printing import format_linear
from src.freealg.terms import tuple_key
from src.hopf.functionals import Cocycle
from src.hopf.hopf_data import HopfData
from src.hopf.tensor import TensorElem
from src.scalar.field import FieldContext
from src.verify.report import VerifyReport
from src.verify.suites import (
    verify_braiding,
    verify_bundle,
    verify_confluence,
    verify_crossed_module,
    verify_dqs,
    verify_hopf,
    verify_model,
    verify_reconciliation,
    verify_same_hopf,
)

logger = logging.getLogger(__name__)

CATALOG_SCHEME = "catalog:"
BANNER = "=" * 50
USAGE_ERRORS = (ConfigError, ParseError, UnknownName, FieldMismatch, CoverageGap)

BOSONISE_VARIANTS = ("auto", "comodule", "left-comodule", "module", "right-module")


@dataclass
class Outcome:
    """What one command prints: table lines, their records, and the reports it ran."""

    title: str
    lines: List[str] = field(default_factory=list)
    rows: List[Dict[str, object]] = field(default_factory=list)
    reports: List[VerifyReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(report.ok for report in self.reports)

    def row(self, line: str, **record) -> None:
        self.lines.append(line)
        self.rows.append(record)


class Session:
    """Validated flags plus the catalog they configure."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.config = SessionConfig().with_degrees(args.degree, args.construction_degree)
        self.ctx: Optional[FieldContext] = FieldContext.from_text(args.field) if args.field else None
        if args.out is not None and not Path(args.out).resolve().parent.is_dir():
            raise ConfigError(f"output directory does not exist: {Path(args.out).parent}")
        self.catalog = Catalog(self.config, verify=not args.no_verify)

    def load(self, source: str) -> Bundle:
        if source.startswith(CATALOG_SCHEME):
            return self.catalog.load(source[len(CATALOG_SCHEME):], self.ctx)
        path = Path(source)
        if not path.is_file():
            raise ConfigError(f"{source} is neither catalog:NAME nor an existing file")
        return self.catalog.load_path(path, self.ctx)

    def load_report(self, bundle: Bundle) -> VerifyReport:
        report = self.catalog.reports.get((bundle.name, bundle.ctx))
        return report if report is not None else verify_bundle(bundle, self.config)


def _letters(bundle: Bundle) -> List[int]:
    """Generators other than defined ones and adjoined inverses."""
    skipped = set(bundle.defines) | {b for _, b in bundle.inverse_pairs()}
    return [g for g in range(len(bundle.pres.generators)) if g not in skipped]


def _require_kind(bundle: Bundle, kind: str) -> None:
    if bundle.kind != kind:
        raise ConfigError(f"{bundle.name} is a {bundle.kind} entry, this command needs a {kind} one")


def _hopf_tables(outcome: Outcome, hopf: HopfData, names: Sequence[str], command: str) -> None:
    pres = hopf.pres
    for name in names:
        g = pres.gen(name)
        delta = TensorElem((pres, pres), hopf.coproduct_word((g,))).format()
        outcome.row(f"Δ{name} = {delta}", command=command, table="coproduct", entry=name, value=delta)
    for name in names:
        g = pres.gen(name)
        s = pres.format_terms(hopf.antipode_word((g,)))
        outcome.row(f"S{name} = {s}", command=command, table="antipode", entry=name, value=s)


def _cross_rules(outcome: Outcome, hopf: HopfData, host_count: int, layout: str, command: str) -> None:
    pres = hopf.pres
    for lhs, rhs in cross_relation_table(hopf, host_count, layout):
        lhs_text, rhs_text = pres.word_text(lhs), pres.format_terms(rhs)
        outcome.row(f"{lhs_text} = {rhs_text}", command=command, table="cross relation",
                    entry=lhs_text, value=rhs_text)


# -- commands -----------------------------------------------------------------------


def cmd_normalform(session: Session) -> Outcome:
    args = session.args
    bundle = session.load(args.source)
    poly = NCPoly.parse(bundle.pres, args.expression)
    outcome = Outcome(f"normal form in {bundle.name}")
    outcome.row(str(poly), command="normalform", entry=args.expression, value=str(poly))
    outcome.reports.append(verify_confluence(bundle.pres, session.config.verify_degree))
    return outcome


def cmd_verify(session: Session) -> Outcome:
    bundle = session.load(session.args.source)
    outcome = Outcome(f"verification of {bundle.name} at degree {session.config.verify_degree}")
    outcome.reports.append(session.load_report(bundle))
    return outcome


def cmd_braid(session: Session) -> Outcome:
    args = session.args
    left = session.load(args.left)
    right = left if args.right == args.left else session.load(args.right)
    source = pair_braiding(left, right)
    outcome = Outcome(source.name)
    if args.pairs:
        for v in _letters(left):
            for w in _letters(right):
                label = f"Ψ({left.pres.generators[v]}⊗{right.pres.generators[w]})"
                value = TensorElem(source.output_slots, source.braid_words((v,), (w,))).format()
                outcome.row(f"{label} = {value}", command="braid", entry=label, value=value)
    reference = left.explicit_braiding if left is right else None
    outcome.reports.append(verify_braiding(source, reference=reference))
    return outcome


def _transmutation_target(session: Session, host: str) -> Optional[str]:
    if session.args.against:
        return session.args.against
    for name in session.catalog.names():
        if session.catalog.meta(name, "transmutes") == host:
            return CATALOG_SCHEME + name
    return None


def _mapping(text: str) -> Dict[str, str]:
    mapping = {}
    for item in text.split():
        target, _, image = item.partition(":")
        if not image:
            raise ConfigError(f"bad transmutation map entry {item!r}, expected target:host")
        mapping[target] = image
    return mapping


def cmd_transmute(session: Session) -> Outcome:
    bundle = session.load(session.args.source)
    _require_kind(bundle, "hopf")
    R = bundle.require("R")
    model = transmute(bundle.hopf, R, session.config.construction_degree)
    outcome = Outcome(model.name)
    pres = bundle.pres
    letters = _letters(bundle)
    for i in letters:
        for j in letters:
            label = f"{pres.generators[i]}·{pres.generators[j]}"
            value = pres.format_terms(model.multiply_words((i,), (j,)))
            outcome.row(f"{label} = {value}", command="transmute", table="product", entry=label, value=value)

    target_source = _transmutation_target(session, bundle.name)
    if target_source is None:
        outcome.reports.append(verify_model(model, session.config.construction_degree))
        return outcome
    target = session.load(target_source)
    _require_kind(target, "braided")
    from_catalog = target_source.startswith(CATALOG_SCHEME)
    mapping_text = session.args.map
    if mapping_text is None and from_catalog:
        mapping_text = session.catalog.meta(target.name, "transmutation_map")
    if not mapping_text:
        raise ConfigError(f"no generator map from {target.name} to {bundle.name}; pass --map")
    mapping = _mapping(mapping_text)
    grouplike = tuple(session.catalog.meta(target.name, "grouplike", "").split()) if from_catalog else ()
    result = TransmutationReconciler(model, target.braided, mapping).run(grouplike)
    failed = dict(result.failures)
    for label in result.checked:
        status = "FAIL" if label in failed else "ok"
        outcome.row(f"{status:4} {label}", command="transmute", table="reconciliation", entry=label,
                    value=failed.get(label, "ok"))
    outcome.reports.append(verify_reconciliation(result))
    return outcome


def _bosonise_variant(bundle: Bundle, requested: str) -> str:
    if requested != "auto":
        return requested
    if bundle.coaction is not None:
        return "comodule" if bundle.coaction.direction is Direction.RIGHT else "left-comodule"
    if bundle.action is not None:
        return "module" if bundle.action.direction is Direction.LEFT else "right-module"
    raise CoverageGap(f"{bundle.name} carries neither a coaction nor an action")


def cmd_bosonise(session: Session) -> Outcome:
    args = session.args
    bundle = session.load(args.source)
    _require_kind(bundle, "braided")
    host = bundle.host
    variant = _bosonise_variant(bundle, args.variant)
    if args.antipode == "printed" and variant != "comodule":
        raise ConfigError("the printed antipode exists only for the right-comodule variant")
    if variant == "comodule":
        hopf = bosonise_comodule(host.hopf, host.require("R"), bundle.braided, antipode=args.antipode)
        layout = HOST_FIRST
    elif variant == "left-comodule":
        hopf = bosonise_left_comodule(host.hopf, host.require("R"), bundle.braided)
        layout = CARRIER_FIRST
    elif variant == "module":
        hopf = bosonise_module(host.hopf, host.require("quasitriangular"), bundle.braided)
        layout = CARRIER_FIRST
    else:
        hopf = bosonise_right_module(host.hopf, host.require("quasitriangular"), bundle.braided)
        layout = HOST_FIRST
    outcome = Outcome(f"{variant} bosonisation {hopf.name}")
    _cross_rules(outcome, hopf, len(host.pres.generators), layout, "bosonise")
    _hopf_tables(outcome, hopf, [bundle.pres.generators[g] for g in _letters(bundle)], "bosonise")
    outcome.reports.append(verify_hopf(hopf, session.config.verify_degree))
    return outcome


def cmd_biproduct(session: Session) -> Outcome:
    args = session.args
    bundle = session.load(args.source)
    _require_kind(bundle, "braided")
    host = bundle.host
    if bundle.coaction is not None and host.R is not None:
        crossed = induce_crossed_module(bundle.coaction, host.R)
    elif bundle.action is not None and host.quasitriangular is not None:
        crossed = induce_crossed_module(bundle.action, host.quasitriangular)
    else:
        raise CoverageGap(f"{bundle.name} has no (co)module structure to induce a crossed module from")
    hopf = biproduct(crossed, bundle.braided)
    layout = CARRIER_FIRST if crossed.direction is Direction.LEFT else HOST_FIRST
    outcome = Outcome(f"biproduct {hopf.name}")
    _cross_rules(outcome, hopf, len(host.pres.generators), layout, "biproduct")
    _hopf_tables(outcome, hopf, [bundle.pres.generators[g] for g in _letters(bundle)], "biproduct")
    degree = session.config.verify_degree
    outcome.reports.append(verify_crossed_module(crossed, min(degree, 2)))
    outcome.reports.append(verify_hopf(hopf, degree))
    if args.compare:
        if bundle.coaction is None or bundle.coaction.direction is not Direction.RIGHT:
            raise ConfigError("--compare needs a right-comodule braided group")
        reference = bosonise_comodule(host.hopf, host.R, bundle.braided)
        outcome.reports.append(verify_same_hopf(hopf, reference, session.config.construction_degree))
    return outcome


def cmd_twist(session: Session) -> Outcome:
    bundle = session.load(session.args.source)
    _require_kind(bundle, "braided")
    chi = bundle.host.require("cocycle")
    model = twist_braided(bundle.braided, chi, session.config.construction_degree)
    outcome = Outcome(f"{bundle.name} twisted by {chi.name}")
    pres = bundle.pres
    letters = _letters(bundle)
    for i in letters:
        for j in letters:
            label = f"{pres.generators[i]}·χ{pres.generators[j]}"
            value = pres.format_terms(model.multiply_words((i,), (j,)))
            outcome.row(f"{label} = {value}", command="twist", entry=label, value=value)
    outcome.reports.append(verify_model(model, session.config.construction_degree))
    return outcome


def cmd_colour_twist(session: Session) -> Outcome:
    args = session.args
    bundle = session.load(args.source) if args.source else None
    if bundle is not None:
        _require_kind(bundle, "braided")
        parameters = bichar_parameters(bundle.host.name)
        if parameters is None:
            raise ConfigError(f"{bundle.name} does not live over a group_bichar host")
        m, n, omega = parameters
    else:
        m, omega = args.modulus, args.form
        n = len(omega)
    decomposition = colour_sqrt_decompose(m, omega)
    outcome = Outcome(f"colour twist of (Z/{m})^{n}")
    outcome.row(str(decomposition), command="colour-twist", entry="decomposition", value=str(decomposition))
    if not decomposition.ok:
        outcome.lines.append("out of scope: no square-root cocycle for this form")
        return outcome

    host = bundle.host if bundle is not None else session.catalog.load(
        f"group_bichar({m},{n},{json.dumps(omega, separators=(',', ':'))})", session.ctx)
    result = colour_twist(host.hopf, host.require("R"), decomposition)
    values = ", ".join(str(v) for v in result.values)
    outcome.row(f"β_χ values on G×G: {values}", command="colour-twist", entry="values", value=values)
    report = VerifyReport(f"colour twist m={m}")
    params = f"{result.pairs_checked} pairs"
    if decomposition.super_like:
        report.add("colour twist", "β_χ takes values ±1", params, result.signs_only, None if result.signs_only else values)
    else:
        report.add("colour twist", "β_χ is identically 1", params, result.trivial, None if result.trivial else values)
    if bundle is not None:
        chi = Cocycle(host.hopf, exponent_table(host.hopf, decomposition.chi_exponents), name="chi")
        model = twist_braided(bundle.braided, chi, session.config.construction_degree)
        failures = colour_enveloping_check(model, host.R)
        witness, detail = failures[0] if failures else (None, "")
        report.add("colour twist", "twisted brackets are the old ones rescaled by χ⁻¹", bundle.name,
                   not failures, witness, detail)
    outcome.reports.append(report)
    return outcome


def cmd_automorphism(session: Session) -> Outcome:
    bundle = session.load(session.args.source)
    _require_kind(bundle, "braided")
    host = bundle.host
    degree = session.config.construction_degree
    model = automorphism_braided_group(host.hopf, host.require("R"), bundle.braided, degree)
    outcome = Outcome(model.name)

    def render(key) -> str:
        words = [pres.word_text(w) for pres, w in zip(model.slots, key) if w]
        return "*".join(words) or "1"

    for label, terms in model.cross_relations():
        value = format_linear(terms, render, key=tuple_key)
        outcome.row(f"{label} = {value}", command="automorphism", table="cross relation", entry=label, value=value)
    for name, terms in model.generator_coproducts():
        value = model.format_coproduct(terms)
        outcome.row(f"Δ{name} = {value}", command="automorphism", table="coproduct", entry=name, value=value)
    outcome.reports.append(verify_model(model, min(degree, 2)))
    return outcome


def cmd_derive_rmatrix(session: Session) -> Outcome:
    R = session.catalog.derive_glq2_rmatrix(session.ctx)
    outcome = Outcome("R on glq2 derived from the quantum plane braiding")
    pres = R.host.pres
    names = [pres.generators[g] for g in range(len(pres.generators))]
    for left in names:
        for right in names:
            value = R.entry(left, right)
            if value:
                label = f"R({left}⊗{right})"
                outcome.row(f"{label} = {value}", command="derive-rmatrix", entry=label, value=str(value))
    outcome.reports.append(verify_dqs(R, session.config.dqs_degree))
    return outcome


def cmd_catalog(session: Session) -> Outcome:
    outcome = Outcome(f"catalog {session.catalog.directory}")
    for row in session.catalog.describe():
        outcome.row(f"{row['name']:<20} {row['kind']:<8} host={row['host']:<8} field={row['field']:<14} "
                    f"{row['description']}", command="catalog", **row)
    outcome.lines.append("families: anyonic(n), group_bichar(m,n,omega)")
    return outcome


COMMANDS: Dict[str, Callable[[Session], Outcome]] = {
    "normalform": cmd_normalform,
    "verify": cmd_verify,
    "braid": cmd_braid,
    "transmute": cmd_transmute,
    "bosonise": cmd_bosonise,
    "biproduct": cmd_biproduct,
    "twist": cmd_twist,
    "colour-twist": cmd_colour_twist,
    "automorphism": cmd_automorphism,
    "derive-rmatrix": cmd_derive_rmatrix,
    "catalog": cmd_catalog,
}


# -- parsing and output ----------------------------------------------------------------


def _form(text: str):
    try:
        omega = json.loads(text)
    except json.JSONDecodeError:
        raise argparse.ArgumentTypeError(f"form must be a JSON matrix, got {text!r}") from None
    if not isinstance(omega, list) or not all(isinstance(row, list) for row in omega):
        raise argparse.ArgumentTypeError("form must be a list of rows")
    return omega


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", type=int, default=4, help="verification degree bound (default 4)")
    common.add_argument("--construction-degree", type=int, default=3,
                        help="degree bound for constructed tables (default 3)")
    common.add_argument("--field", help="transcendental or cyclotomic:m (default: the entry's own field)")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--format", choices=("text", "records"), default="text")
    common.add_argument("--no-verify", action="store_true", help="skip load-time verification")
    common.add_argument("--verbose", action="store_true", help="debug logging and passing checks")

    parser = argparse.ArgumentParser(prog="braided-groups", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("normalform", parents=[common], help="reduce an expression to normal form")
    sub.add_argument("source")
    sub.add_argument("expression")

    sub = commands.add_parser("verify", parents=[common], help="run every axiom suite of an entry")
    sub.add_argument("source")

    sub = commands.add_parser("braid", parents=[common], help="braiding between two entries")
    sub.add_argument("left")
    sub.add_argument("right")
    sub.add_argument("--pairs", action="store_true", help="print Ψ on every generator pair")

    sub = commands.add_parser("transmute", parents=[common], help="transmute a dual-quasitriangular Hopf algebra")
    sub.add_argument("source")
    sub.add_argument("--against", help="braided entry to reconcile with (default: the catalog's)")
    sub.add_argument("--map", help="generator map 'a:alpha b:beta ...' from the target to the host")

    sub = commands.add_parser("bosonise", parents=[common], help="bosonise a braided group")
    sub.add_argument("source")
    sub.add_argument("--variant", choices=BOSONISE_VARIANTS, default="auto")
    sub.add_argument("--antipode", choices=("corrected", "printed"), default="corrected")

    sub = commands.add_parser("biproduct", parents=[common], help="biproduct through the induced crossed module")
    sub.add_argument("source")
    sub.add_argument("--compare", action="store_true", help="compare with the comodule bosonisation")

    sub = commands.add_parser("twist", parents=[common], help="twist a braided group by its host cocycle")
    sub.add_argument("source")

    sub = commands.add_parser("colour-twist", parents=[common], help="square-root twist of a colour bicharacter")
    sub.add_argument("source", nargs="?")
    sub.add_argument("--modulus", type=int)
    sub.add_argument("--form", type=_form)

    sub = commands.add_parser("automorphism", parents=[common], help="automorphism braided group B(H,H)⋉B")
    sub.add_argument("source")

    commands.add_parser("derive-rmatrix", parents=[common], help="solve R on glq2 from the quantum plane")
    commands.add_parser("catalog", parents=[common], help="list built-in entries")
    return parser


def _validate(args: argparse.Namespace) -> None:
    if args.command == "colour-twist" and args.source is None:
        if args.modulus is None or args.form is None:
            raise ConfigError("colour-twist needs SOURCE or both --modulus and --form")
        if args.modulus < 1:
            raise ConfigError(f"--modulus must be positive, got {args.modulus}")


def render(outcome: Outcome, output_format: str, verbose: bool) -> str:
    if output_format == "records":
        chunks = []
        if outcome.rows:
            frame = pd.DataFrame(outcome.rows)
            chunks.append(frame.to_json(orient="records", lines=True, force_ascii=False).strip())
        chunks.extend(report.to_records() for report in outcome.reports)
        return "\n".join(chunk for chunk in chunks if chunk) + "\n"
    lines = [BANNER, outcome.title, BANNER, *outcome.lines]
    for report in outcome.reports:
        lines.append(BANNER)
        lines.append(report.to_text(verbose))
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        _validate(args)
        session = Session(args)
        outcome = COMMANDS[args.command](session)
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.report is not None:
            _emit(render(Outcome(str(exc), reports=[exc.report]), args.format, args.verbose), args.out)
        return 1
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BraidedGroupsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(render(outcome, args.format, args.verbose), args.out)
    logger.debug("%s finished: %s", args.command, "pass" if outcome.ok else "FAIL")
    return 0 if outcome.ok else 1
