"""Finitely presented algebras: generators, degree-lex order and oriented rewrite rules."""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import NonTerminating, OrientationMismatch, UnknownName
from src.freealg.terms import Terms, Word, accumulate, add_into, scaled, word_key
from src.scalar.field import FieldContext, Scalar

logger = logging.getLogger(__name__)


def leading_word(terms: Terms) -> Word:
    return max(terms, key=word_key)


def _contains(word: Word, pattern: Word) -> int:
    """Index of the first occurrence of pattern in word, or -1."""
    n = len(pattern)
    for start in range(len(word) - n + 1):
        if word[start:start + n] == pattern:
            return start
    return -1


def reduce_with(terms: Terms, rules: Dict[Word, Terms]) -> Terms:
    """Fully reduce a linear combination by naive leftmost rewriting."""
    pending = dict(terms)
    result: Terms = {}
    while pending:
        word = max(pending, key=word_key)
        coeff = pending.pop(word)
        for lhs, rhs in rules.items():
            start = _contains(word, lhs)
            if start >= 0:
                prefix, suffix = word[:start], word[start + len(lhs):]
                for mono, c in rhs.items():
                    accumulate(pending, prefix + mono + suffix, coeff * c)
                break
        else:
            accumulate(result, word, coeff)
    return result


class Presentation:
    """Generators in precedence order plus rewrite rules lhs -> rhs.

    Every rule must strictly decrease in the degree-lexicographic order, so
    rewriting terminates. Normal forms are computed by appending one letter at a
    time to an already normal word; only suffixes of the new word can be reducible.
    """

    def __init__(
        self,
        name: str,
        generators: Sequence[str],
        ctx: FieldContext,
        rules: Dict[Word, Terms],
        grading: Optional[Dict[str, int]] = None,
        inverse_pairs: Sequence[Tuple[str, str]] = (),
        relations: Sequence[Terms] = (),
    ):
        self.name = name
        self.generators: Tuple[str, ...] = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f"duplicate generator names in {name}")
        self.ctx = ctx
        self.index: Dict[str, int] = {g: i for i, g in enumerate(self.generators)}
        self.grading: Dict[str, int] = dict(grading or {})
        self.inverse_pairs: Tuple[Tuple[str, str], ...] = tuple(inverse_pairs)
        self.rules: Dict[Word, Terms] = {}
        for lhs, rhs in rules.items():
            self._check_rule(lhs, rhs)
            self.rules[lhs] = {w: c for w, c in rhs.items() if c}
        self.relations: Tuple[Terms, ...] = tuple(relations) or tuple(
            self._rule_relation(lhs, rhs) for lhs, rhs in self.rules.items()
        )
        self.max_lhs = max((len(lhs) for lhs in self.rules), default=0)
        self._append_memo: Dict[Tuple[Word, int], Terms] = {}
        self._normal_words: List[List[Word]] = [[()]]

    def _check_rule(self, lhs: Word, rhs: Terms) -> None:
        if not lhs:
            raise NonTerminating(f"{self.name}: a rule cannot rewrite the empty word")
        for word in rhs:
            if word_key(word) >= word_key(lhs):
                raise NonTerminating(
                    f"{self.name}: rule {self.word_text(lhs)} -> ... does not decrease "
                    f"(monomial {self.word_text(word)})"
                )

    def _rule_relation(self, lhs: Word, rhs: Terms) -> Terms:
        relation = {lhs: self.ctx.one}
        add_into(relation, rhs, -self.ctx.one)
        return relation

    # -- construction from unoriented relations -----------------------------

    @classmethod
    def oriented(
        cls,
        name: str,
        generators: Sequence[str],
        ctx: FieldContext,
        relations: Sequence[Tuple[Terms, Optional[Word]]],
        grading: Optional[Dict[str, int]] = None,
        inverse_pairs: Sequence[Tuple[str, str]] = (),
    ) -> "Presentation":
        """Orient relations by their leading words and inter-reduce the rule set.

        Each relation is a linear combination meant to vanish, paired with the
        left-hand side it was stated with (or None when stated as an equation).
        A stated left-hand side that is not the leading word raises OrientationMismatch.
        """
        for relation, stated in relations:
            if stated is not None and relation and leading_word(relation) != stated:
                raise OrientationMismatch(
                    f"{name}: stated rule for {stated} disagrees with the monomial order"
                )

        rules: Dict[Word, Terms] = {}
        worklist: List[Terms] = [dict(r) for r, _ in relations]
        while worklist:
            relation = reduce_with(worklist.pop(0), rules)
            if not relation:
                continue
            lhs = leading_word(relation)
            lead = relation.pop(lhs)
            rhs = scaled(relation, -lead.inverse())
            # rules whose left side contains the new one are re-queued
            for old_lhs in [w for w in rules if _contains(w, lhs) >= 0]:
                old_rhs = rules.pop(old_lhs)
                requeued = {old_lhs: ctx.one}
                add_into(requeued, old_rhs, -ctx.one)
                worklist.append(requeued)
            rules[lhs] = rhs
            for other in list(rules):
                rules[other] = reduce_with(rules[other], rules)
            logger.debug("%s: oriented rule on %s (%d rules)", name, lhs, len(rules))

        stated = [r for r, _ in relations]
        return cls(name, generators, ctx, rules, grading, inverse_pairs, stated)

    # -- names and words ------------------------------------------------------

    @property
    def signature(self) -> Tuple[str, Tuple[str, ...]]:
        return (self.name, self.generators)

    def compatible(self, other: "Presentation") -> bool:
        return other is self or other.signature == self.signature

    def gen(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownName(f"{name!r} is not a generator of {self.name}") from None

    def word(self, *names: str) -> Word:
        return tuple(self.gen(n) for n in names)

    def degree(self, word: Word) -> int:
        if not self.grading:
            return len(word)
        return sum(self.grading.get(self.generators[i], 1) for i in word)

    def word_text(self, word: Word) -> str:
        """Print a word with runs written as powers, e.g. `a^2*d`."""
        if not word:
            return "1"
        parts = []
        position = 0
        while position < len(word):
            letter = word[position]
            run = 1
            while position + run < len(word) and word[position + run] == letter:
                run += 1
            name = self.generators[letter]
            parts.append(name if run == 1 else f"{name}^{run}")
            position += run
        return "*".join(parts)

    # -- normal forms -----------------------------------------------------------

    def _append(self, word: Word, letter: int) -> Terms:
        """Normal form of word*letter for a normal word."""
        key = (word, letter)
        cached = self._append_memo.get(key)
        if cached is not None:
            return cached
        extended = word + (letter,)
        result: Optional[Terms] = None
        for length in range(1, min(self.max_lhs, len(extended)) + 1):
            rhs = self.rules.get(extended[-length:])
            if rhs is not None:
                prefix = extended[:-length]
                result = {}
                for mono, coeff in rhs.items():
                    add_into(result, self._multiply_normal(prefix, mono), coeff)
                break
        if result is None:
            result = {extended: self.ctx.one}
        self._append_memo[key] = result
        return result

    def _multiply_normal(self, word: Word, tail: Word) -> Terms:
        current: Terms = {word: self.ctx.one}
        for letter in tail:
            following: Terms = {}
            for w, c in current.items():
                add_into(following, self._append(w, letter), c)
            current = following
        return current

    def reduce_word(self, word: Word) -> Terms:
        return self._multiply_normal((), word)

    def multiply_words(self, left: Word, right: Word) -> Terms:
        """Normal form of left*right for a normal left word."""
        return self._multiply_normal(left, right)

    def normal_form(self, terms: Terms) -> Terms:
        result: Terms = {}
        for word, coeff in terms.items():
            add_into(result, self.reduce_word(word), coeff)
        return result

    def multiply(self, left: Terms, right: Terms) -> Terms:
        result: Terms = {}
        for lw, lc in left.items():
            for rw, rc in right.items():
                add_into(result, self.multiply_words(lw, rw), lc * rc)
        return result

    def is_normal(self, word: Word) -> bool:
        return all(word[start:start + len(lhs)] != lhs
                   for lhs in self.rules for start in range(len(word) - len(lhs) + 1))

    def normal_words(self, length: int) -> List[Word]:
        """All normal words of exactly the given length, in increasing order."""
        while len(self._normal_words) <= length:
            previous = self._normal_words[-1]
            following = []
            for word in previous:
                for letter in range(len(self.generators)):
                    extended = word + (letter,)
                    if not any(extended[-len(lhs):] == lhs for lhs in self.rules if len(lhs) <= len(extended)):
                        following.append(extended)
            self._normal_words.append(sorted(following))
        return self._normal_words[length]

    def words_up_to(self, bound: int) -> List[Word]:
        words: List[Word] = []
        for length in range(bound + 1):
            words.extend(self.normal_words(length))
        return words

    def basis(self, limit: int = 64) -> Optional[List[Word]]:
        """The full normal-word basis when the algebra is finite-dimensional.

        Returns None when normal words still exist at length `limit`.
        """
        words: List[Word] = []
        for length in range(limit + 1):
            layer = self.normal_words(length)
            if not layer:
                return words
            words.extend(layer)
        return None

    def is_finite(self, limit: int = 64) -> bool:
        return self.basis(limit) is not None

    # -- printing ---------------------------------------------------------------

    def format_terms(self, terms: Terms) -> str:
        from src.freealg.printing import format_linear

        return format_linear(terms, self.word_text)

    def rule_lines(self) -> List[str]:
        return [
            f"{self.word_text(lhs)} -> {self.format_terms(rhs)}"
            for lhs, rhs in sorted(self.rules.items(), key=lambda kv: word_key(kv[0]))
        ]

    def __repr__(self) -> str:
        return f"Presentation({self.name}, {list(self.generators)}, {len(self.rules)} rules)"


def free_presentation(name: str, generators: Sequence[str], ctx: FieldContext) -> Presentation:
    return Presentation(name, generators, ctx, {})


def unit_presentation(ctx: FieldContext, name: str = "k") -> Presentation:
    """The ground field as an algebra with no generators."""
    return Presentation(name, (), ctx, {})


def scalar_terms(value: Scalar) -> Terms:
    return {(): value} if value else {}
