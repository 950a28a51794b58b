"""Axiom suites. Every check enumerates normal words up to a degree bound and
records the first failing input together with its printed residual."""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from src.freealg.confluence import check_confluence
from src.freealg.presentation import Presentation
from src.freealg.terms import Terms, Word, accumulate, add_into
from src.hopf.functionals import BilinearForm, DQSFunctional, convolution_failures
from src.hopf.hopf_data import HopfData
from src.hopf.quasitriangular import QuasitriangularElement
from src.hopf.tensor import TensorElem, TensorTerms
from src.braided.braided_hopf import coaction_antipode_product
from src.braided.braiding import BraidingSource, RightComoduleBraiding
from src.braided.coaction import Action, Coaction, Direction
from src.verify.report import VerifyReport, merge_reports

logger = logging.getLogger(__name__)

HOPF_SUITE = "Hopf axioms"
BRAIDED_SUITE = "braided Hopf axioms"
BRAIDING_SUITE = "braiding"
CONFLUENCE_SUITE = "confluence"
DQS_SUITE = "dual quasitriangular"
COCYCLE_SUITE = "cocycle"
QUASITRIANGULAR_SUITE = "quasitriangular"
COACTION_SUITE = "coaction"
ACTION_SUITE = "action"
CROSSED_SUITE = "crossed module"
RECONCILIATION_SUITE = "reconciliation"
MODEL_SUITE = "constructed model"
COHERENCE_SUITE = "coherence"


class _Tally:
    """Counts failures of one check and keeps the first witness."""

    def __init__(self, suite: str, check: str, params: str):
        self.suite = suite
        self.check = check
        self.params = params
        self.total = 0
        self.failed = 0
        self.witness = None
        self.detail = ""

    def observe(self, witness, residual: Optional[str]) -> None:
        self.total += 1
        if residual is None:
            return
        self.failed += 1
        if self.witness is None:
            self.witness = witness
            self.detail = residual

    def record(self, report: VerifyReport) -> None:
        params = f"{self.params}, {self.total} cases"
        detail = self.detail
        if self.failed > 1:
            detail += f" ({self.failed} failing cases)"
        report.add(self.suite, self.check, params, self.failed == 0, self.witness, detail)


def _difference(got: Mapping, expected: Mapping, one) -> Dict:
    result = dict(got)
    add_into(result, expected, -one)
    return result


def _tensor_text(slots: Sequence[Presentation], terms: TensorTerms) -> Optional[str]:
    return TensorElem(slots, terms).format() if terms else None


def _terms_text(pres: Presentation, terms: Terms) -> Optional[str]:
    return pres.format_terms(terms) if terms else None


def _words_text(pres: Presentation, *words: Word) -> str:
    return " ⊗ ".join(pres.word_text(w) for w in words)


def _relation_terms(pres: Presentation) -> List[Terms]:
    """Stated relations plus every rule written as lhs - rhs."""
    one = pres.ctx.one
    relations = [dict(r) for r in pres.relations]
    for lhs, rhs in sorted(pres.rules.items()):
        relation = {lhs: one}
        add_into(relation, rhs, -one)
        relations.append(relation)
    return relations


# -- confluence ---------------------------------------------------------------------


def verify_confluence(pres: Presentation, degree_bound: int) -> VerifyReport:
    report = VerifyReport(pres.name)
    result = check_confluence(pres, degree_bound)
    tally = _Tally(CONFLUENCE_SUITE, "ambiguities resolve", f"{pres.name}, degree ≤ {degree_bound}")
    for overlap in result.overlaps:
        residual = _difference(overlap.first_result, overlap.second_result, pres.ctx.one)
        tally.observe(overlap.word, None if not residual else
                      f"{pres.word_text(overlap.word)} ({overlap.kind}): {pres.format_terms(residual)}")
    tally.record(report)
    return report


# -- Hopf and braided Hopf axioms ----------------------------------------------------------


def _structure_checks(report: VerifyReport, suite: str, structure, degree_bound: int) -> None:
    """Coassociativity, counit and antipode on words, algebra-map property on relations.

    Shared by ordinary and braided Hopf algebras: the axioms read the same once
    Δ of a product is computed in the appropriate tensor product algebra.
    """
    pres = structure.pres
    ctx = structure.ctx
    one = ctx.one
    slots2 = (pres, pres)
    slots3 = (pres, pres, pres)
    params = f"{structure.name}, degree ≤ {degree_bound}"
    coassoc = _Tally(suite, "coassociativity", params)
    counit = _Tally(suite, "counit", params)
    antipode = _Tally(suite, "antipode", params)

    for w in pres.words_up_to(degree_bound):
        split = structure.coproduct_word(w)
        left: TensorTerms = {}
        right: TensorTerms = {}
        for (a, b), c in split.items():
            for (a1, a2), c1 in structure.coproduct_word(a).items():
                accumulate(left, (a1, a2, b), c * c1)
            for (b1, b2), c2 in structure.coproduct_word(b).items():
                accumulate(right, (a, b1, b2), c * c2)
        coassoc.observe(w, _tensor_text(slots3, _difference(left, right, one)))

        expected = pres.reduce_word(w)
        via_left: Terms = {}
        via_right: Terms = {}
        for (a, b), c in split.items():
            accumulate(via_left, b, c * structure.counit_word(a))
            accumulate(via_right, a, c * structure.counit_word(b))
        residual = _difference(via_left, expected, one)
        add_into(residual, _difference(via_right, expected, one))
        counit.observe(w, _terms_text(pres, residual))

        eps = structure.counit_word(w)
        unit = {(): eps} if eps else {}
        s_left: Terms = {}
        s_right: Terms = {}
        for (a, b), c in split.items():
            add_into(s_left, pres.multiply(structure.antipode_word(a), {b: one}), c)
            add_into(s_right, pres.multiply(pres.reduce_word(a), structure.antipode_word(b)), c)
        bad = _difference(s_left, unit, one) or _difference(s_right, unit, one)
        antipode.observe(w, _terms_text(pres, bad))

    for tally in (coassoc, counit, antipode):
        tally.record(report)

    relations = _relation_terms(pres)
    rel_params = f"{structure.name}, {len(relations)} relations"
    coproduct_map = _Tally(suite, "coproduct respects relations", rel_params)
    counit_map = _Tally(suite, "counit respects relations", rel_params)
    antipode_map = _Tally(suite, "antipode respects relations", rel_params)
    for relation in relations:
        delta: TensorTerms = {}
        eps = ctx.zero
        s: Terms = {}
        for word, c in relation.items():
            add_into(delta, structure.coproduct_word(word), c)
            eps = eps + c * structure.counit_word(word)
            add_into(s, structure.antipode_word(word), c)
        label = pres.format_terms(relation)
        coproduct_map.observe(label, _tensor_text(slots2, delta))
        counit_map.observe(label, None if not eps else str(eps))
        antipode_map.observe(label, _terms_text(pres, s))
    for tally in (coproduct_map, counit_map, antipode_map):
        tally.record(report)


def verify_hopf(H: HopfData, degree_bound: int) -> VerifyReport:
    report = VerifyReport(H.name)
    _structure_checks(report, HOPF_SUITE, H, degree_bound)
    logger.info("%s: Hopf axioms %s", H.name, "pass" if report.ok else "FAIL")
    return report


def verify_braided_hopf(B, degree_bound: int, triple_bound: int = 1) -> VerifyReport:
    """Braided bialgebra and antipode axioms plus the braiding's own checks.

    Products of coproducts live in the braided tensor product, so every split
    of a word must give the same Δ̲, and every split must give the same S̲ under
    braided antimultiplicativity. Over a right comodule with R, each split is
    also checked against (S̲c⁽¹⁾)(S̲b⁽¹⁾)R(b⁽²⁾⊗c⁽²⁾), which braids the coactions
    of b and c rather than those of their antipodes.
    """
    report = VerifyReport(B.name)
    _structure_checks(report, BRAIDED_SUITE, B, degree_bound)
    pres = B.pres
    one = B.ctx.one
    params = f"{B.name}, degree ≤ {degree_bound}"
    homomorphism = _Tally(BRAIDED_SUITE, "coproduct is multiplicative into B⊗̲B", params)
    antimultiplicative = _Tally(BRAIDED_SUITE, "antipode is braided-antimultiplicative", params)
    R = _comodule_form(B)
    through_coaction = _Tally(BRAIDED_SUITE, "antipode of a product through the coaction", params)
    for w in pres.words_up_to(degree_bound):
        if len(w) < 2:
            continue
        whole_delta = B.coproduct_word(w)
        whole_s = B.antipode_word(w)
        delta_bad = s_bad = coaction_bad = None
        for k in range(1, len(w)):
            head, tail = w[:k], w[k:]
            if R is not None and coaction_bad is None:
                via_coaction = coaction_antipode_product(B, head, tail, R)
                coaction_bad = _terms_text(pres, _difference(via_coaction, whole_s, one))
            if delta_bad is None:
                split = B.braided_product(B.coproduct_word(head), B.coproduct_word(tail))
                delta_bad = _tensor_text(B.slots, _difference(split, whole_delta, one))
            if s_bad is None:
                split_s = B.braided_anti_product(B.antipode_word(head), B.antipode_word(tail))
                s_bad = _terms_text(pres, _difference(split_s, whole_s, one))
        homomorphism.observe(w, delta_bad)
        antimultiplicative.observe(w, s_bad)
        if R is not None:
            through_coaction.observe(w, coaction_bad)
    homomorphism.record(report)
    antimultiplicative.record(report)
    if R is not None:
        through_coaction.record(report)
    report.extend(verify_braiding(B.source, triple_bound))
    logger.info("%s: braided Hopf axioms %s", B.name, "pass" if report.ok else "FAIL")
    return report


def _comodule_form(B) -> Optional[BilinearForm]:
    """R of a right-comodule braiding whose coaction is B's own, else None."""
    source = B.source
    coaction = getattr(B, "coaction", None)
    if not isinstance(source, RightComoduleBraiding) or coaction is None:
        return None
    if coaction.direction is not Direction.RIGHT or source.left_coaction is not coaction:
        return None
    return source.R


# -- braidings ------------------------------------------------------------------------


def _apply_at(source: BraidingSource, terms: TensorTerms, position: int) -> TensorTerms:
    result: TensorTerms = {}
    for key, c in terms.items():
        for (x, y), d in source.braid_words(key[position], key[position + 1]).items():
            accumulate(result, key[:position] + (x, y) + key[position + 2:], c * d)
    return result


def yang_baxter_residual(source: BraidingSource, u: Word, v: Word, w: Word) -> TensorTerms:
    """Ψ₁₂Ψ₂₃Ψ₁₂ - Ψ₂₃Ψ₁₂Ψ₂₃ on u⊗v⊗w."""
    start = {(u, v, w): source.ctx.one}
    left = _apply_at(source, _apply_at(source, _apply_at(source, start, 0), 1), 0)
    right = _apply_at(source, _apply_at(source, _apply_at(source, start, 1), 0), 1)
    return _difference(left, right, source.ctx.one)


def _generators(pres: Presentation) -> List[Word]:
    return [(g,) for g in range(len(pres.generators))]


def _words_of_length(pres: Presentation, bound: int) -> List[Word]:
    return [w for w in pres.words_up_to(bound) if w]


def verify_braiding(
    source: BraidingSource, triple_bound: int = 1, reference: Optional[BraidingSource] = None
) -> VerifyReport:
    """Slot check, Yang-Baxter equation, functoriality and (optionally) agreement with a reference."""
    left, right = source.left, source.right
    report = VerifyReport(source.name)
    out_left, out_right = source.output_slots
    slots_ok = out_left.compatible(right) and out_right.compatible(left)
    report.add(
        BRAIDING_SUITE, "lands in W⊗V", source.name, slots_ok,
        None if slots_ok else (out_left.name, out_right.name),
        "" if slots_ok else f"output slots {out_left.name}⊗{out_right.name}, expected {right.name}⊗{left.name}",
    )
    if not slots_ok:
        return report
    one = source.ctx.one
    out = (right, left)

    if left.compatible(right):
        words = _words_of_length(left, triple_bound)
        ybe = _Tally(BRAIDING_SUITE, "Yang-Baxter equation", f"{source.name}, words of degree ≤ {triple_bound}")
        for u, v, w in itertools.product(words, repeat=3):
            ybe.observe((u, v, w), _tensor_text((left, left, left), yang_baxter_residual(source, u, v, w)))
        ybe.record(report)

    relations = _Tally(BRAIDING_SUITE, "respects relations", source.name)
    for relation in _relation_terms(left):
        for g in _generators(right):
            residual = source.braid_terms(relation, {g: one})
            relations.observe((left.format_terms(relation), g), _tensor_text(out, residual))
    for relation in _relation_terms(right):
        for g in _generators(left):
            residual = source.braid_terms({g: one}, relation)
            relations.observe((g, right.format_terms(relation)), _tensor_text(out, residual))
    relations.record(report)

    hexagon = _Tally(BRAIDING_SUITE, "functoriality", f"{source.name}, generator pairs")
    for u, v in itertools.product(_generators(left), repeat=2):
        for w in _generators(right):
            got = source.braid_terms(left.reduce_word(u + v), {w: one})
            expected: TensorTerms = {}
            for (w1, v1), c1 in source.braid_words(v, w).items():
                for (w2, u1), c2 in source.braid_words(u, w1).items():
                    for vn, c3 in left.multiply_words(u1, v1).items():
                        accumulate(expected, (w2, vn), c1 * c2 * c3)
            hexagon.observe((u + v, w), _tensor_text(out, _difference(got, expected, one)))
    for v in _generators(left):
        for u, w in itertools.product(_generators(right), repeat=2):
            got = source.braid_terms({v: one}, right.reduce_word(u + w))
            expected = {}
            for (u1, v1), c1 in source.braid_words(v, u).items():
                for (w1, v2), c2 in source.braid_words(v1, w).items():
                    for wn, c3 in right.multiply_words(u1, w1).items():
                        accumulate(expected, (wn, v2), c1 * c2 * c3)
            hexagon.observe((v, u + w), _tensor_text(out, _difference(got, expected, one)))
    hexagon.record(report)

    if reference is not None:
        report.extend(compare_braidings(source, reference))
    return report


def compare_braidings(source: BraidingSource, reference: BraidingSource, bound: int = 2) -> VerifyReport:
    """Agreement of two braidings on word pairs of total degree ≤ bound."""
    left, right = source.left, source.right
    report = VerifyReport(source.name)
    tally = _Tally(BRAIDING_SUITE, f"agrees with {reference.name}", f"total degree ≤ {bound}")
    for v in _words_of_length(left, bound):
        for w in _words_of_length(right, bound - len(v)):
            residual = _difference(source.braid_words(v, w), reference.braid_words(v, w), source.ctx.one)
            tally.observe((v, w), _tensor_text((right, left), residual))
    tally.record(report)
    return report


# -- bilinear forms ----------------------------------------------------------------------


def _relation_consistency(report: VerifyReport, suite: str, form: BilinearForm, degree_bound: int) -> None:
    """F(r⊗f) = F(f⊗r) = 0 for every relation r and normal word f."""
    host = form.host
    pres = host.pres
    relations = _relation_terms(pres)
    longest = max((len(w) for r in relations for w in r), default=0)
    words = pres.words_up_to(max(degree_bound - longest, 1))
    params = f"{form.name} on {host.name}, {len(relations)} relations"
    left = _Tally(suite, "left argument respects relations", params)
    right = _Tally(suite, "right argument respects relations", params)
    for relation in relations:
        label = pres.format_terms(relation)
        for f in words:
            value = form.evaluate(relation, f)
            left.observe((label, f), None if not value else f"{form.name}(r⊗{pres.word_text(f)}) = {value}")
            value = form.evaluate(f, relation)
            right.observe((f, label), None if not value else f"{form.name}({pres.word_text(f)}⊗r) = {value}")
    left.record(report)
    right.record(report)


def _convolution(report: VerifyReport, suite: str, form: BilinearForm, degree_bound: int) -> None:
    failures = convolution_failures(form, form.inverse, degree_bound)
    witness = detail = None
    if failures:
        u, w, got, expected = failures[0]
        witness = (u, w)
        detail = f"{_words_text(form.host.pres, u, w)}: {got} ≠ {expected}"
    report.add(
        suite, "convolution invertible", f"{form.name} on {form.host.name}, degree ≤ {degree_bound}",
        not failures, witness, detail or "",
    )


def quasi_commutativity_residual(R: DQSFunctional, h: Word, g: Word) -> Terms:
    """g₁h₁R(h₂⊗g₂) - R(h₁⊗g₁)h₂g₂."""
    host = R.host
    pres = host.pres
    one = R.ctx.one
    result: Terms = {}
    g_split = list(host.coproduct_word(g).items())
    for (h1, h2), hc in host.coproduct_word(h).items():
        for (g1, g2), gc in g_split:
            value = R.evaluate_words(h2, g2)
            if value:
                add_into(result, pres.multiply_words(g1, h1), hc * gc * value)
            value = R.evaluate_words(h1, g1)
            if value:
                add_into(result, pres.multiply_words(h2, g2), -one * hc * gc * value)
    return result


def verify_dqs(R: DQSFunctional, degree_bound: int) -> VerifyReport:
    host = R.host
    pres = host.pres
    report = VerifyReport(f"{R.name} on {host.name}")
    _relation_consistency(report, DQS_SUITE, R, degree_bound)
    tally = _Tally(DQS_SUITE, "quasi-commutativity", f"{host.name}, total degree ≤ {degree_bound}")
    words = pres.words_up_to(degree_bound)
    for h in words:
        for g in words:
            if len(h) + len(g) <= degree_bound:
                tally.observe((h, g), _terms_text(pres, quasi_commutativity_residual(R, h, g)))
    tally.record(report)
    _convolution(report, DQS_SUITE, R, degree_bound)
    logger.info("%s: dual quasitriangular laws %s", host.name, "pass" if report.ok else "FAIL")
    return report


def cocycle_residual(chi: BilinearForm, x: Word, y: Word, z: Word):
    """χ(x₁⊗y₁)χ(x₂y₂⊗z) - χ(y₁⊗z₁)χ(x⊗y₂z₂)."""
    host = chi.host
    pres = host.pres
    total = chi.ctx.zero
    y_split = list(host.coproduct_word(y).items())
    for (x1, x2), xc in host.coproduct_word(x).items():
        for (y1, y2), yc in y_split:
            value = chi.evaluate_words(x1, y1)
            if value:
                total = total + xc * yc * value * chi.evaluate(pres.multiply_words(x2, y2), z)
    for (y1, y2), yc in y_split:
        for (z1, z2), zc in host.coproduct_word(z).items():
            value = chi.evaluate_words(y1, z1)
            if value:
                total = total - yc * zc * value * chi.evaluate(x, pres.multiply_words(y2, z2))
    return total


def verify_cocycle(chi: BilinearForm, degree_bound: int) -> VerifyReport:
    host = chi.host
    pres = host.pres
    report = VerifyReport(f"{chi.name} on {host.name}")
    _relation_consistency(report, COCYCLE_SUITE, chi, degree_bound)
    tally = _Tally(COCYCLE_SUITE, "cocycle condition", f"{host.name}, total degree ≤ {degree_bound}")
    words = pres.words_up_to(degree_bound)
    for x, y, z in itertools.product(words, repeat=3):
        if len(x) + len(y) + len(z) <= degree_bound:
            value = cocycle_residual(chi, x, y, z)
            tally.observe((x, y, z), None if not value else f"{_words_text(pres, x, y, z)}: {value}")
    tally.record(report)
    _convolution(report, COCYCLE_SUITE, chi, degree_bound)
    return report


# -- quasitriangular elements -----------------------------------------------------------


def verify_quasitriangular(Q: QuasitriangularElement) -> VerifyReport:
    host = Q.host
    pres = host.pres
    one = host.ctx.one
    report = VerifyReport(f"{Q.name} on {host.name}")
    R = Q.element
    slots3 = (pres, pres, pres)

    def placed(positions: Tuple[int, int]) -> TensorElem:
        terms: TensorTerms = {}
        for r1, r2, c in Q.legs():
            key = [(), (), ()]
            key[positions[0]], key[positions[1]] = r1, r2
            accumulate(terms, tuple(key), c)
        return TensorElem(slots3, terms)

    R12, R13, R23 = placed((0, 1)), placed((0, 2)), placed((1, 2))
    left = R.expand_slot(0, host.coproduct_word, (pres, pres))
    got = (left - R13 * R23).terms
    report.add(QUASITRIANGULAR_SUITE, "(Δ⊗id)ℛ = ℛ₁₃ℛ₂₃", host.name, not got, "ℛ" if got else None,
               _tensor_text(slots3, got) or "")
    right = R.expand_slot(1, host.coproduct_word, (pres, pres))
    got = (right - R13 * R12).terms
    report.add(QUASITRIANGULAR_SUITE, "(id⊗Δ)ℛ = ℛ₁₃ℛ₁₂", host.name, not got, "ℛ" if got else None,
               _tensor_text(slots3, got) or "")

    basis = host.basis() or []
    tally = _Tally(QUASITRIANGULAR_SUITE, "Δᵒᵖ(h)ℛ = ℛΔ(h)", f"{host.name}, basis")
    for h in basis:
        delta = host.coproduct(h)
        residual = (delta.swap() * R - R * delta).terms
        tally.observe(h, _tensor_text((pres, pres), residual))
    tally.record(report)

    unit = {((),): one}
    for index, label in ((0, "(ε⊗id)ℛ = 1"), (1, "(id⊗ε)ℛ = 1")):
        reduced = R.contract_slots([index], host.counit_word).terms
        residual = _difference(reduced, unit, one)
        report.add(QUASITRIANGULAR_SUITE, label, host.name, not residual, "ℛ" if residual else None,
                   _tensor_text((pres,), residual) or "")
    return report


# -- comodules and modules ---------------------------------------------------------------


def verify_coaction(coaction: Coaction, degree_bound: int) -> VerifyReport:
    """Coassociativity, counit and algebra-map property of a coaction."""
    host = coaction.host
    carrier = coaction.carrier
    one = coaction.ctx.one
    report = VerifyReport(coaction.name)
    right = coaction.direction is Direction.RIGHT
    params = f"{carrier.name}, degree ≤ {degree_bound}"
    coassoc = _Tally(COACTION_SUITE, "comodule coassociativity", params)
    counit = _Tally(COACTION_SUITE, "comodule counit", params)
    if right:
        slots3 = (carrier, host.pres, host.pres)
    else:
        slots3 = (host.pres, host.pres, carrier)
    for v in carrier.words_up_to(degree_bound):
        twice: TensorTerms = {}
        via_host: TensorTerms = {}
        flat: Terms = {}
        for v_carrier, v_host, c in coaction.split(v):
            for inner_carrier, inner_host, d in coaction.split(v_carrier):
                key = (inner_carrier, inner_host, v_host) if right else (v_host, inner_host, inner_carrier)
                accumulate(twice, key, c * d)
            for (h1, h2), d in host.coproduct_word(v_host).items():
                accumulate(via_host, (v_carrier, h1, h2) if right else (h1, h2, v_carrier), c * d)
            accumulate(flat, v_carrier, c * host.counit_word(v_host))
        coassoc.observe(v, _tensor_text(slots3, _difference(twice, via_host, one)))
        counit.observe(v, _terms_text(carrier, _difference(flat, carrier.reduce_word(v), one)))
    coassoc.record(report)
    counit.record(report)

    relations = _Tally(COACTION_SUITE, "algebra map on relations", carrier.name)
    for relation in _relation_terms(carrier):
        image: TensorTerms = {}
        for word, c in relation.items():
            add_into(image, coaction.coact_word(word), c)
        relations.observe(carrier.format_terms(relation), _tensor_text(coaction.slots, image))
    relations.record(report)
    return report


def verify_action(action: Action, degree_bound: int) -> VerifyReport:
    """Module law, unit law and module-algebra compatibility with the relations."""
    host = action.host
    carrier = action.carrier
    one = action.ctx.one
    left = action.direction is Direction.LEFT
    report = VerifyReport(action.name)
    host_words = host.basis() or host.words_up_to(min(degree_bound, 2))
    carrier_words = carrier.words_up_to(min(degree_bound, 2))
    params = f"{carrier.name}, host words {len(host_words)}"
    module = _Tally(ACTION_SUITE, "module law", params)
    for h, g in itertools.product(host_words, repeat=2):
        product = host.pres.multiply_words(h, g)
        for v in carrier_words:
            if left:
                nested = action.act_terms(h, action.act_word(g, v))
            else:
                nested = action.act_terms(g, action.act_word(h, v))
            combined: Terms = {}
            for word, c in product.items():
                add_into(combined, action.act_word(word, v), c)
            module.observe((h, g, v), _terms_text(carrier, _difference(nested, combined, one)))
    module.record(report)

    relations = _Tally(ACTION_SUITE, "module algebra respects relations", params)
    for relation in _relation_terms(carrier):
        for h in host_words:
            relations.observe((h, carrier.format_terms(relation)), _terms_text(carrier, action.act_terms(h, relation)))
    relations.record(report)
    return report


def verify_crossed_module(X, degree_bound: int = 2) -> VerifyReport:
    """Crossed-module compatibility plus the module and comodule axioms of its two halves."""
    report = VerifyReport(X.name)
    host_words = X.host.basis() or X.host.words_up_to(degree_bound)
    carrier_words = X.carrier.words_up_to(degree_bound)
    tally = _Tally(CROSSED_SUITE, "compatibility", f"{len(host_words)} host words × {len(carrier_words)} carrier words")
    for h in host_words:
        for v in carrier_words:
            tally.observe((h, v), _tensor_text(X.slots, X.compatibility_residual(h, v)))
    tally.record(report)
    report.extend(verify_action(X.action, degree_bound))
    report.extend(verify_coaction(X.coaction, degree_bound))
    return report


def verify_reconciliation(result) -> VerifyReport:
    report = VerifyReport(f"reconciliation with {result.target}")
    failed = dict(result.failures)
    for label in result.checked:
        report.add(RECONCILIATION_SUITE, label, result.target, label not in failed,
                   label if label in failed else None, failed.get(label, ""))
    return report


# -- constructed models --------------------------------------------------------------


def verify_model(model, degree_bound: int) -> VerifyReport:
    """Associativity of a structure-constant model, plus its second product path when it has one."""
    report = VerifyReport(model.name)
    params = f"{model.name}, degree ≤ {degree_bound}"
    failures = model.associativity_failures(degree_bound)
    witness = failures[0] if failures else None
    report.add(MODEL_SUITE, "associativity", params, not failures,
               None if witness is None else ", ".join(model.format_key(k, "*") for k in witness),
               f"{len(failures)} failing triples" if failures else "")
    two_path = getattr(model, "two_path_failures", None)
    if two_path is not None:
        failures = two_path(degree_bound)
        witness = failures[0] if failures else None
        report.add(MODEL_SUITE, "product agrees with the braided tensor product", params, not failures,
                   None if witness is None else ", ".join(model.format_key(k, "*") for k in witness),
                   f"{len(failures)} failing pairs" if failures else "")
    return report


def verify_same_hopf(first: HopfData, second: HopfData, degree_bound: int) -> VerifyReport:
    """Two constructions of one Hopf algebra agree on products, coproducts, counit and antipode."""
    report = VerifyReport(f"{first.name} vs {second.name}")
    params = f"degree ≤ {degree_bound}"
    same_letters = list(first.pres.generators) == list(second.pres.generators)
    report.add(COHERENCE_SUITE, "same generators", params, same_letters, None if same_letters else
               f"{' '.join(first.pres.generators)} | {' '.join(second.pres.generators)}")
    if not same_letters:
        return report
    one = first.ctx.one
    words = first.pres.words_up_to(degree_bound)
    products = _Tally(COHERENCE_SUITE, "products", params)
    for u, v in itertools.product(words, repeat=2):
        if len(u) + len(v) > degree_bound:
            continue
        residual = _difference(first.pres.multiply_words(u, v), second.pres.multiply_words(u, v), one)
        products.observe(_words_text(first.pres, u, v), _terms_text(first.pres, residual))
    products.record(report)
    coproducts = _Tally(COHERENCE_SUITE, "coproducts", params)
    counits = _Tally(COHERENCE_SUITE, "counits", params)
    antipodes = _Tally(COHERENCE_SUITE, "antipodes", params)
    for w in words:
        text = first.pres.word_text(w)
        residual = _difference(first.coproduct_word(w), second.coproduct_word(w), one)
        coproducts.observe(text, _tensor_text((first.pres, first.pres), residual))
        difference = first.counit_word(w) - second.counit_word(w)
        counits.observe(text, str(difference) if difference else None)
        residual = _difference(first.antipode_word(w), second.antipode_word(w), one)
        antipodes.observe(text, _terms_text(first.pres, residual))
    for tally in (coproducts, counits, antipodes):
        tally.record(report)
    return report


# -- whole bundles ---------------------------------------------------------------------


def _warm(pres: Presentation, bound: int) -> None:
    # normal-word layers are built lazily; build them before threads share the presentation
    pres.words_up_to(bound)


def verify_bundle(bundle, config, workers: int = 4) -> VerifyReport:
    """Every gate that applies to a catalog bundle, run concurrently."""
    degree = config.verify_degree
    tasks: List[Callable[[], VerifyReport]] = [lambda: verify_confluence(bundle.pres, degree)]
    _warm(bundle.pres, degree)
    if bundle.host is not None:
        _warm(bundle.host.pres, degree)
    if bundle.kind == "hopf":
        tasks.append(lambda: verify_hopf(bundle.hopf, degree))
    else:
        tasks.append(lambda: verify_braided_hopf(bundle.braided, degree))
        if bundle.explicit_braiding is not None and bundle.braided.source is not bundle.explicit_braiding:
            tasks.append(lambda: compare_braidings(bundle.braided.source, bundle.explicit_braiding))
    if bundle.R is not None:
        tasks.append(lambda: verify_dqs(bundle.R, config.dqs_degree))
    if bundle.cocycle is not None:
        tasks.append(lambda: verify_cocycle(bundle.cocycle, config.dqs_degree))
    if bundle.quasitriangular is not None:
        tasks.append(lambda: verify_quasitriangular(bundle.quasitriangular))
    if bundle.coaction is not None:
        tasks.append(lambda: verify_coaction(bundle.coaction, min(degree, 2)))
    if bundle.action is not None:
        tasks.append(lambda: verify_action(bundle.action, min(degree, 2)))

    logger.debug("%s: running %d verification suites", bundle.name, len(tasks))
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        reports = list(pool.map(lambda task: task(), tasks))
    report = merge_reports(bundle.name, reports)
    logger.info("%s: %d checks, %s", bundle.name, len(report.records), "pass" if report.ok else "FAIL")
    return report
