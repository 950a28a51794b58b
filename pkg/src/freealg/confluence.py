"""Degree-bounded diamond-lemma checks for a rewrite system."""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

from src.freealg.presentation import Presentation
from src.freealg.terms import Terms, Word, add_into

logger = logging.getLogger(__name__)


@dataclass
class OverlapRecord:
    """One ambiguity: a word reducible by two rules at overlapping positions."""

    word: Word
    first_rule: Word
    second_rule: Word
    kind: str  # overlap | inclusion
    first_result: Terms
    second_result: Terms

    @property
    def resolved(self) -> bool:
        return self.first_result == self.second_result


@dataclass
class ConfluenceReport:
    presentation: str
    degree_bound: int
    overlaps: List[OverlapRecord] = field(default_factory=list)

    @property
    def confluent(self) -> bool:
        return all(o.resolved for o in self.overlaps)

    @property
    def failures(self) -> List[OverlapRecord]:
        return [o for o in self.overlaps if not o.resolved]

    def __str__(self) -> str:
        status = "confluent" if self.confluent else f"{len(self.failures)} unresolved"
        return f"{self.presentation} to degree {self.degree_bound}: {len(self.overlaps)} ambiguities, {status}"


def _rewrite_at(pres: Presentation, word: Word, lhs: Word, start: int) -> Terms:
    """Apply one rule at one position, then reduce fully."""
    prefix, suffix = word[:start], word[start + len(lhs):]
    result: Terms = {}
    for mono, coeff in pres.rules[lhs].items():
        add_into(result, pres.reduce_word(prefix + mono + suffix), coeff)
    return result


def _ambiguities(pres: Presentation, bound: int):
    rules = sorted(pres.rules)
    for first, second in itertools.product(rules, repeat=2):
        # proper overlaps: a suffix of first is a prefix of second
        for k in range(1, min(len(first), len(second))):
            if first[-k:] == second[:k]:
                word = first + second[k:]
                if len(word) <= bound:
                    yield word, first, 0, second, len(first) - k, "overlap"
        # inclusions: second sits strictly inside first
        if first != second and len(second) < len(first):
            for start in range(len(first) - len(second) + 1):
                if first[start:start + len(second)] == second and len(first) <= bound:
                    yield first, first, 0, second, start, "inclusion"


def check_confluence(pres: Presentation, degree_bound: int) -> ConfluenceReport:
    """Resolve every overlap and inclusion ambiguity up to the degree bound."""
    report = ConfluenceReport(pres.name, degree_bound)
    for word, first, first_at, second, second_at, kind in _ambiguities(pres, degree_bound):
        report.overlaps.append(
            OverlapRecord(
                word=word,
                first_rule=first,
                second_rule=second,
                kind=kind,
                first_result=_rewrite_at(pres, word, first, first_at),
                second_result=_rewrite_at(pres, word, second, second_at),
            )
        )
    logger.debug("%s", report)
    return report


def exhaustive_normal_forms(pres: Presentation, bound: int) -> Dict[Word, List[FrozenSet]]:
    """For every word up to the bound, the distinct results of each first rewrite step.

    Each rewrite of a single rule occurrence is followed by full reduction; a
    word with more than one distinct result is a confluence failure. Checking
    all words this way covers all reduction paths by induction on the order.
    """
    outcomes: Dict[Word, List[FrozenSet]] = {}
    letters = range(len(pres.generators))
    for length in range(bound + 1):
        for word in itertools.product(letters, repeat=length):
            results = set()
            for lhs in pres.rules:
                for start in range(len(word) - len(lhs) + 1):
                    if word[start:start + len(lhs)] == lhs:
                        results.add(frozenset(_rewrite_at(pres, word, lhs, start).items()))
            if not results:
                results.add(frozenset({word: pres.ctx.one}.items()))
            outcomes[word] = sorted(results, key=lambda s: sorted(map(str, s)))
    return outcomes


def path_disagreements(pres: Presentation, bound: int) -> List[Tuple[Word, int]]:
    """Words whose reduction paths reach more than one normal form."""
    return [
        (word, len(results))
        for word, results in exhaustive_normal_forms(pres, bound).items()
        if len(results) > 1
    ]
