"""
Todd-Coxeter coset enumeration (HLT strategy with lookahead).

Columns of the coset table are laid out as 2k for generator k and 2k+1 for
its inverse. Cosets are 0-based internally; the public `EnumResult` is
standardized and 1-based, with coset 1 the subgroup itself.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.algebra.errors import AlgebraError, AlphabetError, CosetLimitExceeded
from src.algebra.perms import Perm, generate_closure, perm_order
from src.algebra.presentations import Presentation, evaluate
from src.algebra.words import Word
from src.config import DEFAULT_MAX_COSETS

logger = logging.getLogger(__name__)

# Total definitions allowed per unit of max_cosets before the run is abandoned.
DEFINITION_BUDGET = 16


class EnumStatus(str, Enum):
    FINITE = "finite"
    LIMIT_EXCEEDED = "limit_exceeded"


@dataclass(frozen=True)
class EnumResult:
    status: EnumStatus
    coset_count: int
    defined: int
    presentation: Presentation
    actions: Tuple[Tuple[str, Perm], ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.status is EnumStatus.FINITE

    @property
    def index(self) -> Optional[int]:
        return self.coset_count if self.is_finite else None

    def action(self, name: str) -> Perm:
        for generator, perm in self.actions:
            if generator == name:
                return perm
        if not self.is_finite:
            raise CosetLimitExceeded(self.coset_count)
        raise AlphabetError(f"unknown generator {name!r}")

    def action_map(self) -> Dict[str, Perm]:
        return dict(self.actions)


class _LimitReached(Exception):
    pass


class _CosetTable:
    def __init__(self, presentation: Presentation, max_cosets: int):
        self.alphabet = presentation.alphabet
        self.ncols = 2 * len(self.alphabet)
        self.table: List[List[Optional[int]]] = [[None] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.max_cosets = max_cosets
        self.max_defined = max_cosets * DEFINITION_BUDGET
        relators = [self.compile(r) for r in presentation.relators]
        order = sorted(range(len(relators)), key=lambda i: (len(relators[i]), i))
        self.relators = [relators[i] for i in order if relators[i]]

    def compile(self, word: Word) -> List[int]:
        if word.alphabet != self.alphabet:
            raise AlphabetError(f"word {word} is not over [{self.alphabet}]")
        return [2 * self.alphabet.position(name) + (0 if sign == 1 else 1) for name, sign in word.letters]

    @property
    def defined(self) -> int:
        return len(self.table)

    def is_live(self, coset: int) -> bool:
        return self.parent[coset] == coset

    def define(self, coset: int, column: int) -> None:
        if self.live >= self.max_cosets or self.defined >= self.max_defined:
            raise _LimitReached()
        new = len(self.table)
        row: List[Optional[int]] = [None] * self.ncols
        row[column ^ 1] = coset
        self.table.append(row)
        self.parent.append(new)
        self.table[coset][column] = new
        self.live += 1

    def rep(self, coset: int) -> int:
        parent = self.parent
        root = coset
        while parent[root] != root:
            root = parent[root]
        while parent[coset] != root:
            parent[coset], coset = root, parent[coset]
        return root

    def merge(self, first: int, second: int, queue: List[int]) -> None:
        a, b = self.rep(first), self.rep(second)
        if a == b:
            return
        keep, drop = min(a, b), max(a, b)
        self.parent[drop] = keep
        self.live -= 1
        queue.append(drop)

    def coincidence(self, first: int, second: int) -> None:
        table = self.table
        queue: List[int] = []
        self.merge(first, second, queue)
        position = 0
        while position < len(queue):
            dead = queue[position]
            position += 1
            for column in range(self.ncols):
                target = table[dead][column]
                if target is None:
                    continue
                table[target][column ^ 1] = None
                mu, nu = self.rep(dead), self.rep(target)
                if table[mu][column] is not None:
                    self.merge(nu, table[mu][column], queue)
                elif table[nu][column ^ 1] is not None:
                    self.merge(mu, table[nu][column ^ 1], queue)
                else:
                    table[mu][column] = nu
                    table[nu][column ^ 1] = mu

    def scan(self, coset: int, word: Sequence[int], fill: bool) -> None:
        table = self.table
        forward, backward = coset, coset
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[forward][word[i]] is not None:
                forward = table[forward][word[i]]
                i += 1
            if i > j:
                if forward != backward:
                    self.coincidence(forward, backward)
                return
            while j >= i and table[backward][word[j] ^ 1] is not None:
                backward = table[backward][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(forward, backward)
                return
            if i == j:
                table[forward][word[i]] = backward
                table[backward][word[i] ^ 1] = forward
                return
            if not fill:
                return
            self.define(forward, word[i])

    def process(self, coset: int) -> None:
        for relator in self.relators:
            self.scan(coset, relator, fill=True)
            if not self.is_live(coset):
                return
        for column in range(self.ncols):
            if self.table[coset][column] is None:
                self.define(coset, column)

    def lookahead(self) -> None:
        """Scan every live coset under every relator without making definitions."""
        before = self.live
        for coset in range(len(self.table)):
            for relator in self.relators:
                if not self.is_live(coset):
                    break
                self.scan(coset, relator, fill=False)
        logger.debug("lookahead freed %d of %d cosets", before - self.live, before)

    def standardized_actions(self) -> Tuple[int, Tuple[Tuple[str, Perm], ...]]:
        order = [0]
        number = {0: 0}
        for coset in order:
            for column in range(self.ncols):
                target = self.table[coset][column]
                if target is None:
                    raise AlgebraError("coset table is incomplete after enumeration")
                if target not in number:
                    number[target] = len(order)
                    order.append(target)
        if len(order) != self.live:
            raise AlgebraError(f"coset table has {self.live} live cosets but {len(order)} are reachable")
        actions = []
        for position, name in enumerate(self.alphabet.names):
            column = 2 * position
            images = tuple(number[self.table[coset][column]] + 1 for coset in order)
            actions.append((name, Perm(images)))
        return len(order), tuple(actions)


def todd_coxeter(
    presentation: Presentation,
    subgroup_gens: Iterable[Word] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> EnumResult:
    """Enumerate the cosets of <subgroup_gens> in the presented group.

    Returns a `limit_exceeded` result, never an exception, when more than
    `max_cosets` cosets would be live at once.
    """
    if max_cosets < 1:
        raise AlgebraError("max_cosets must be at least 1")
    table = _CosetTable(presentation, max_cosets)
    subgroup = [table.compile(w) for w in subgroup_gens]

    def limit_result() -> EnumResult:
        logger.info(
            "coset enumeration stopped at %d live cosets (%d defined)", table.live, table.defined
        )
        return EnumResult(EnumStatus.LIMIT_EXCEEDED, table.live, table.defined, presentation)

    if len(presentation.alphabet) == 0:
        return EnumResult(EnumStatus.FINITE, 1, 1, presentation)

    try:
        for word in subgroup:
            if word:
                table.scan(0, word, fill=True)
    except _LimitReached:
        return limit_result()

    coset = 0
    while coset < len(table.table):
        if table.is_live(coset):
            try:
                table.process(coset)
            except _LimitReached:
                live = table.live
                table.lookahead()
                if table.live >= live or table.defined >= table.max_defined:
                    return limit_result()
                continue
        coset += 1

    count, actions = table.standardized_actions()
    logger.debug("enumeration finished: index %d, %d cosets defined", count, table.defined)
    return EnumResult(EnumStatus.FINITE, count, table.defined, presentation, actions)


def follow(result: EnumResult, coset: int, word: Word) -> int:
    """The coset reached from `coset` by reading `word` (1-based)."""
    if not result.is_finite:
        raise CosetLimitExceeded(result.coset_count)
    if not 1 <= coset <= result.coset_count:
        raise AlgebraError(f"coset {coset} outside 1..{result.coset_count}")
    actions = result.action_map()
    for name, sign in word.letters:
        perm = actions.get(name)
        if perm is None:
            raise AlphabetError(f"unknown generator {name!r}")
        coset = perm(coset) if sign == 1 else perm.inverse()(coset)
    return coset


def word_action(result: EnumResult, word: Word) -> Perm:
    if not result.is_finite:
        raise CosetLimitExceeded(result.coset_count)
    return evaluate(word, result.action_map(), Perm.identity(result.coset_count))


def element_order_in(result: EnumResult, word: Word) -> int:
    """Order of `word` acting on the cosets; the element order when the subgroup is trivial."""
    return perm_order(word_action(result, word))


def element_order(
    presentation: Presentation, word: Word, max_cosets: int = DEFAULT_MAX_COSETS
) -> int:
    result = todd_coxeter(presentation, (), max_cosets)
    if not result.is_finite:
        raise CosetLimitExceeded(max_cosets)
    return element_order_in(result, word)


def order_fingerprint(result: EnumResult) -> Dict[int, int]:
    """Number of elements of each order, from the regular representation."""
    if not result.is_finite:
        raise CosetLimitExceeded(result.coset_count)
    perms = [perm for _, perm in result.actions]
    elements = generate_closure(perms) if perms else {Perm.identity(1)}
    counts = Counter(perm_order(element) for element in elements)
    return dict(sorted(counts.items()))


def exponent(result: EnumResult) -> int:
    return math.lcm(*order_fingerprint(result))
