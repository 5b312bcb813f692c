"""
Permutations on {1..n}.

Composition is left to right: `(p * q)(x) == q(p(x))`. Permutations order
lexicographically by their image tuple, which is the enumeration order used
by the homomorphism search.
"""
import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Sequence, Set, Tuple

from src.algebra.errors import AlgebraError


@dataclass(frozen=True, order=True)
class Perm:
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images:
            raise AlgebraError("a permutation needs degree at least 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise AlgebraError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        images = list(range(1, degree + 1))
        seen: Set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    raise AlgebraError(f"point {point} outside 1..{degree}")
                if point in seen:
                    raise AlgebraError(f"point {point} appears in two cycles")
                seen.add(point)
            for current, following in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                images[current - 1] = following
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self.images, 1))

    @property
    def order(self) -> int:
        return perm_order(self)

    def one(self) -> "Perm":
        return Perm.identity(self.degree)

    def inverse(self) -> "Perm":
        inverse = [0] * self.degree
        for point, image in enumerate(self.images, 1):
            inverse[image - 1] = point
        return Perm(tuple(inverse))

    def lift(self, degree: int) -> "Perm":
        """Extend to a larger degree, fixing the new points."""
        if degree < self.degree:
            raise AlgebraError(f"cannot lift a degree-{self.degree} permutation to degree {degree}")
        return Perm(self.images + tuple(range(self.degree + 1, degree + 1)))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen: Set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start - 1]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point - 1]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return perm_compose(self, other)

    def __pow__(self, exponent: int) -> "Perm":
        base = self if exponent >= 0 else self.inverse()
        result = self.one()
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in cycle) + ")" for cycle in cycles)


def perm_compose(p: Perm, q: Perm) -> Perm:
    if p.degree != q.degree:
        raise AlgebraError(f"degree mismatch: {p.degree} vs {q.degree}")
    q_images = q.images
    return Perm(tuple(q_images[x - 1] for x in p.images))


def perm_order(p: Perm) -> int:
    lengths = [len(cycle) for cycle in p.cycles()]
    return math.lcm(*lengths) if lengths else 1


@lru_cache(maxsize=None)
def all_perms(degree: int) -> Tuple[Perm, ...]:
    """Every permutation of the given degree, in lexicographic order."""
    return tuple(Perm(images) for images in itertools.permutations(range(1, degree + 1)))


@lru_cache(maxsize=None)
def involutions(degree: int) -> Tuple[Perm, ...]:
    """Permutations with p * p == identity, identity included."""
    return tuple(p for p in all_perms(degree) if (p * p).is_identity)


def is_klein_pair(p: Perm, q: Perm) -> bool:
    """p and q are distinct commuting non-trivial involutions."""
    return (
        not p.is_identity
        and not q.is_identity
        and p != q
        and (p * p).is_identity
        and (q * q).is_identity
        and p * q == q * p
    )


def orbit(perms: Sequence[Perm], point: int = 1) -> List[int]:
    """Orbit of `point` in breadth-first discovery order."""
    found = [point]
    seen = {point}
    for current in found:
        for perm in perms:
            image = perm(current)
            if image not in seen:
                seen.add(image)
                found.append(image)
    return found


def is_transitive(perms: Sequence[Perm]) -> bool:
    if not perms:
        return False
    return len(orbit(perms)) == perms[0].degree


def generate_closure(generators: Sequence[Perm]) -> Set[Perm]:
    """The group generated by `generators`, by breadth-first closure."""
    if not generators:
        return set()
    start = Perm.identity(generators[0].degree)
    seen = {start}
    queue = deque([start])
    while queue:
        element = queue.popleft()
        for g in generators:
            product = element * g
            if product not in seen:
                seen.add(product)
                queue.append(product)
    return seen


def brute_force_order(generators: Sequence[Perm]) -> int:
    return max(len(generate_closure(generators)), 1)
