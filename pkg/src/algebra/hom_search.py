"""
Exhaustive search for homomorphisms from a finitely presented group into S_n.

Generator images are assigned in alphabet order, each ranging over S_n (or
its involutions) in lexicographic order. A relator is checked as soon as the
last generator it mentions has an image, which prunes most of the tree.
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.algebra.errors import AlphabetError, DegreeLimitError
from src.algebra.perms import Perm, all_perms, involutions
from src.algebra.presentations import Presentation, word_image
from src.algebra.words import Word
from src.config import MAX_SEARCH_DEGREE

logger = logging.getLogger(__name__)

# (generator position, +1/-1) pairs
Compiled = List[Tuple[int, int]]
Images = Tuple[int, ...]


@dataclass(frozen=True)
class HomCandidate:
    degree: int
    images: Tuple[Tuple[str, Perm], ...]

    def image(self, name: str) -> Perm:
        for generator, perm in self.images:
            if generator == name:
                return perm
        raise AlphabetError(f"unknown generator {name!r}")

    def as_dict(self) -> Dict[str, Perm]:
        return dict(self.images)

    def __str__(self) -> str:
        return ", ".join(f"{name} -> {perm}" for name, perm in self.images)


@dataclass(frozen=True)
class SearchSpec:
    presentation: Presentation
    degree: int
    restrict_to_involutions: bool = False
    require_nontrivial: Optional[Word] = None
    require_order_two: Tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "require_order_two", tuple(self.require_order_two))
        constraints = list(self.require_order_two)
        if self.require_nontrivial is not None:
            constraints.append(self.require_nontrivial)
        for word in constraints:
            if word.alphabet != self.presentation.alphabet:
                raise AlphabetError(f"constraint {word} is not over [{self.presentation.alphabet}]")


def _check_degree(degree: int) -> None:
    if not 1 <= degree <= MAX_SEARCH_DEGREE:
        raise DegreeLimitError(f"search degree must be in 1..{MAX_SEARCH_DEGREE}, got {degree}")


def _compile(word: Word, presentation: Presentation) -> Compiled:
    return [(presentation.alphabet.position(name), sign) for name, sign in word.letters]


def _evaluate(word: Compiled, images: Sequence[Images], inverses: Sequence[Images], degree: int) -> Images:
    # 0-based image tuples, composed left to right
    current: Images = tuple(range(degree))
    for position, sign in word:
        g = images[position] if sign == 1 else inverses[position]
        current = tuple(g[x] for x in current)
    return current


def _inverse(images: Images) -> Images:
    out = [0] * len(images)
    for point, image in enumerate(images):
        out[image] = point
    return tuple(out)


class _Searcher:
    def __init__(self, spec: SearchSpec):
        self.spec = spec
        self.degree = spec.degree
        self.ngens = len(spec.presentation.alphabet)
        pool = involutions(spec.degree) if spec.restrict_to_involutions else all_perms(spec.degree)
        self.pool = [tuple(x - 1 for x in p.images) for p in pool]
        self.pool_inverses = [_inverse(p) for p in self.pool]
        self.identity = tuple(range(spec.degree))
        # checks[k]: relators whose highest generator position is k
        self.checks: List[List[Compiled]] = [[] for _ in range(self.ngens)]
        for relator in spec.presentation.relators:
            compiled = _compile(relator, spec.presentation)
            if compiled:
                self.checks[max(position for position, _ in compiled)].append(compiled)

    def branch(self, first: int) -> List[Tuple[int, ...]]:
        """All consistent assignments whose first image is pool[first], as pool indices."""
        chosen = [first]
        images = [self.pool[first]]
        inverses = [self.pool_inverses[first]]
        found: List[Tuple[int, ...]] = []
        if not self._passes(0, images, inverses):
            return found
        self._extend(chosen, images, inverses, found)
        return found

    def _passes(self, level: int, images, inverses) -> bool:
        return all(
            _evaluate(relator, images, inverses, self.degree) == self.identity
            for relator in self.checks[level]
        )

    def _extend(self, chosen, images, inverses, found) -> None:
        level = len(chosen)
        if level == self.ngens:
            found.append(tuple(chosen))
            return
        for index, (image, inverse) in enumerate(zip(self.pool, self.pool_inverses)):
            chosen.append(index)
            images.append(image)
            inverses.append(inverse)
            if self._passes(level, images, inverses):
                self._extend(chosen, images, inverses, found)
            chosen.pop()
            images.pop()
            inverses.pop()


_worker_searcher: Optional[_Searcher] = None


def _init_worker(spec: SearchSpec) -> None:
    global _worker_searcher
    _worker_searcher = _Searcher(spec)


def _run_branch(first: int) -> List[Tuple[int, ...]]:
    return _worker_searcher.branch(first)


def _iterate_assignments(spec: SearchSpec, workers: int) -> Iterator[Tuple[Perm, ...]]:
    searcher = _Searcher(spec)
    pool = involutions(spec.degree) if spec.restrict_to_involutions else all_perms(spec.degree)
    if searcher.ngens == 0:
        yield ()
        return
    branches = range(len(searcher.pool))
    if workers > 1:
        # one searcher per worker process; map keeps branch order
        chunksize = max(1, len(branches) // (4 * workers))
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(spec,)
        ) as executor:
            results = list(executor.map(_run_branch, branches, chunksize=chunksize))
    else:
        results = [searcher.branch(first) for first in branches]
    for found in results:
        for indices in found:
            yield tuple(pool[i] for i in indices)


def _satisfies(spec: SearchSpec, images: Dict[str, Perm]) -> bool:
    if spec.require_nontrivial is not None:
        if word_image(spec.require_nontrivial, images, spec.degree).is_identity:
            return False
    for word in spec.require_order_two:
        image = word_image(word, images, spec.degree)
        if image.is_identity or not (image * image).is_identity:
            return False
    return True


def search(spec: SearchSpec, workers: int = 1) -> List[HomCandidate]:
    """Every homomorphism meeting the constraints, in lexicographic order of image tuples."""
    _check_degree(spec.degree)
    names = spec.presentation.generators
    candidates = []
    for assignment in _iterate_assignments(spec, max(1, workers)):
        images = dict(zip(names, assignment))
        if _satisfies(spec, images):
            candidates.append(HomCandidate(spec.degree, tuple(zip(names, assignment))))
    logger.debug(
        "degree %d search over [%s] found %d candidate(s)",
        spec.degree,
        spec.presentation.alphabet,
        len(candidates),
    )
    return candidates


def count_all_homs(presentation: Presentation, degree: int) -> int:
    """Brute-force count over every image tuple; for cross-checking `search` on tiny inputs."""
    _check_degree(degree)
    perms = [tuple(x - 1 for x in p.images) for p in all_perms(degree)]
    relators = [_compile(r, presentation) for r in presentation.relators]
    identity = tuple(range(degree))
    count = 0
    for assignment in itertools.product(perms, repeat=len(presentation.alphabet)):
        inverses = [_inverse(p) for p in assignment]
        if all(_evaluate(r, assignment, inverses, degree) == identity for r in relators):
            count += 1
    return count
