"""Squarefree monomial ideals as antichains of variable-support bitmasks.

A squarefree monomial is identified with its support set of variables,
stored as an integer bitmask (variable ``i`` is bit ``i-1``).  An ideal is
the antichain of its divisibility-minimal generators, kept sorted by mask
so that equal ideals compare equal and serialize identically.  Everything
here is immutable and safe to share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    AmbientMismatch,
    InvalidExponent,
    InvalidGenerator,
    ParseError,
    ZeroIdeal,
)

MAX_AMBIENT = 63  # supports fit a single machine word


def _mask_from_indices(indices: Iterable[int], ambient_n: int) -> int:
    mask = 0
    for i in indices:
        if not 1 <= i <= ambient_n:
            raise InvalidGenerator(f"variable index {i} out of range 1..{ambient_n}")
        mask |= 1 << (i - 1)
    return mask


def _indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _check_ambient(ambient_n: int) -> None:
    if not 1 <= ambient_n <= MAX_AMBIENT:
        raise InvalidGenerator(f"ambient_n must be in 1..{MAX_AMBIENT}, got {ambient_n}")


@dataclass(frozen=True, order=True)
class Monomial:
    """A squarefree monomial: a support bitmask in a ring with ambient_n variables."""

    mask: int
    ambient_n: int

    @classmethod
    def from_support(cls, indices: Iterable[int], ambient_n: int) -> "Monomial":
        _check_ambient(ambient_n)
        return cls(_mask_from_indices(indices, ambient_n), ambient_n)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(_indices_from_mask(self.mask))

    @property
    def indices(self) -> tuple[int, ...]:
        return _indices_from_mask(self.mask)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def divides(self, other: "Monomial") -> bool:
        if self.ambient_n != other.ambient_n:
            raise AmbientMismatch(
                f"ambient mismatch: {self.ambient_n} vs {other.ambient_n}"
            )
        return self.mask & other.mask == self.mask

    def __str__(self) -> str:
        if not self.mask:
            return "1"
        return "*".join(f"x{i}" for i in self.indices)


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    """Divisibility-minimal elements of a set of support masks, sorted ascending."""
    distinct = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in distinct:
        if not any(k & m == k for k in kept):
            kept.append(m)
    kept.sort()
    return kept


@dataclass(frozen=True)
class Ideal:
    """A squarefree monomial ideal in canonical form.

    ``gens`` is the antichain of minimal generators sorted by ascending
    support mask; the empty tuple is the zero ideal.  Construct through
    :func:`minimize_generators`, :meth:`from_supports` or :meth:`parse`
    rather than directly, unless the input is already canonical.
    """

    ambient_n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        _check_ambient(self.ambient_n)
        prev = 0
        for g in self.gens:
            if g.ambient_n != self.ambient_n:
                raise AmbientMismatch("generator ambient differs from ideal ambient")
            if g.mask == 0:
                raise InvalidGenerator("constant generator: unit ideal is not representable")
            if g.mask <= prev:
                raise InvalidGenerator("generators not in canonical ascending order")
            prev = g.mask
        masks = [g.mask for g in self.gens]
        for i, a in enumerate(masks):
            for b in masks[i + 1 :]:
                if a & b == a or a & b == b:
                    raise InvalidGenerator("generators are not an antichain")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]], ambient_n: int) -> "Ideal":
        _check_ambient(ambient_n)
        masks = []
        for sup in supports:
            m = _mask_from_indices(sup, ambient_n)
            if m == 0:
                raise InvalidGenerator("empty support: generators must be nonconstant")
            masks.append(m)
        return cls(ambient_n, tuple(Monomial(m, ambient_n) for m in _minimal_masks(masks)))

    @classmethod
    def zero(cls, ambient_n: int) -> "Ideal":
        return cls(ambient_n, ())

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def gen_masks(self) -> tuple[int, ...]:
        return tuple(g.mask for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        """Membership of a squarefree monomial: some generator divides it."""
        if m.ambient_n != self.ambient_n:
            raise AmbientMismatch(
                f"ambient mismatch: {self.ambient_n} vs {m.ambient_n}"
            )
        return any(g.mask & m.mask == g.mask for g in self.gens)

    def min_gen_degree(self) -> int:
        """Minimum degree of a monomial in the ideal (= of a minimal generator)."""
        if not self.gens:
            raise ZeroIdeal("min_gen_degree undefined for the zero ideal")
        return min(g.degree for g in self.gens)

    # -- ideal arithmetic ----------------------------------------------------

    def squarefree_power(self, k: int) -> "Ideal":
        """The ideal generated by the squarefree monomials in the k-th power.

        Generated by products of k distinct generators with pairwise
        disjoint supports; every squarefree monomial of the ordinary power
        is divisible by such a product.
        """
        if k < 1:
            raise InvalidExponent(f"exponent must be >= 1, got {k}")
        if k == 1 or not self.gens:
            return self
        masks = self.gen_masks()
        products: set[int] = set()

        def extend(start: int, union: int, count: int) -> None:
            if count == k:
                products.add(union)
                return
            # upper range keeps enough generators to reach k factors
            for j in range(start, len(masks) - (k - count) + 1):
                if not masks[j] & union:
                    extend(j + 1, union | masks[j], count + 1)

        extend(0, 0, 0)
        if not products:
            return Ideal.zero(self.ambient_n)
        return Ideal(
            self.ambient_n,
            tuple(Monomial(m, self.ambient_n) for m in _minimal_masks(products)),
        )

    def nu(self) -> int:
        """Largest k with a nonzero k-th squarefree power.

        Equals the maximum number of pairwise support-disjoint generators,
        computed by memoized set packing over the remaining-variable mask.
        """
        if not self.gens:
            raise ZeroIdeal("nu undefined for the zero ideal")
        by_low: dict[int, list[int]] = {}
        for m in self.gen_masks():
            by_low.setdefault(m & -m, []).append(m)
        cache: dict[int, int] = {}

        def best(universe: int) -> int:
            if universe == 0:
                return 0
            got = cache.get(universe)
            if got is not None:
                return got
            low = universe & -universe
            result = best(universe ^ low)
            for g in by_low.get(low, ()):
                if g & universe == g:
                    result = max(result, 1 + best(universe & ~g))
            cache[universe] = result
            return result

        full = (1 << self.ambient_n) - 1
        return best(full)

    def colon_by_variable(self, j: int) -> "Ideal":
        """The colon ideal (I : x_j)."""
        if not 1 <= j <= self.ambient_n:
            raise InvalidGenerator(f"variable index {j} out of range 1..{self.ambient_n}")
        if not self.gens:
            return self
        bit = 1 << (j - 1)
        masks = [m & ~bit for m in self.gen_masks()]
        if any(m == 0 for m in masks):
            raise InvalidGenerator(
                f"(I : x{j}) is the unit ideal, which is not representable"
            )
        return Ideal(
            self.ambient_n,
            tuple(Monomial(m, self.ambient_n) for m in _minimal_masks(masks)),
        )

    def add_variable(self, j: int) -> "Ideal":
        """The sum ideal (I, x_j)."""
        if not 1 <= j <= self.ambient_n:
            raise InvalidGenerator(f"variable index {j} out of range 1..{self.ambient_n}")
        bit = 1 << (j - 1)
        masks = list(self.gen_masks()) + [bit]
        return Ideal(
            self.ambient_n,
            tuple(Monomial(m, self.ambient_n) for m in _minimal_masks(masks)),
        )

    # -- primes and duality ---------------------------------------------------

    def minimal_primes(self) -> list[frozenset[int]]:
        """All minimal monomial primes, as the variable sets generating them.

        These are the inclusion-minimal transversals of the generator
        supports, enumerated by branching on the variables of an uncovered
        generator.  For an edge ideal they are the minimal vertex covers.
        """
        if not self.gens:
            raise ZeroIdeal("minimal_primes undefined for the zero ideal")
        gen_masks = self.gen_masks()
        leaves: set[int] = set()

        def extend(cover: int, excluded: int) -> None:
            uncovered = 0
            for g in gen_masks:
                if not g & cover:
                    uncovered = g
                    break
            else:
                leaves.add(cover)
                return
            choices = uncovered & ~excluded
            tried = 0
            while choices:
                v = choices & -choices
                choices ^= v
                extend(cover | v, excluded | tried)
                tried |= v

        extend(0, 0)
        minimal = _minimal_masks(leaves)
        return [frozenset(_indices_from_mask(m)) for m in minimal]

    def krull_dim(self) -> int:
        """Dimension of the quotient ring: ambient_n minus minimum cover size."""
        if not self.gens:
            return self.ambient_n
        return self.ambient_n - min(len(c) for c in self.minimal_primes())

    def alexander_dual(self) -> "Ideal":
        """The ideal generated by the products over the minimal primes."""
        if not self.gens:
            raise ZeroIdeal("alexander_dual undefined for the zero ideal")
        return Ideal.from_supports(self.minimal_primes(), self.ambient_n)

    # -- text format -----------------------------------------------------------

    def to_text(self) -> str:
        """Serialize to the ideal text format (canonical, round-trip stable)."""
        lines = [f"n={self.ambient_n}"]
        lines.extend(" ".join(str(i) for i in g.indices) for g in self.gens)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Ideal":
        """Parse the ideal text format: `n=<count>` header, one generator per line."""
        ambient_n = None
        supports: list[list[int]] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if ambient_n is None:
                m = re.fullmatch(r"n\s*=\s*(\d+)", line)
                if not m:
                    raise ParseError(f"line {lineno}: expected 'n=<count>' header")
                ambient_n = int(m.group(1))
                if not 1 <= ambient_n <= MAX_AMBIENT:
                    raise ParseError(f"line {lineno}: ambient_n must be in 1..{MAX_AMBIENT}")
                continue
            tokens = line.split()
            try:
                supports.append([int(t) for t in tokens])
            except ValueError:
                raise ParseError(f"line {lineno}: bad variable index in {line!r}") from None
        if ambient_n is None:
            raise ParseError("missing 'n=<count>' header")
        try:
            return cls.from_supports(supports, ambient_n)
        except InvalidGenerator as exc:
            raise ParseError(str(exc)) from None

    def to_json_dict(self) -> dict:
        return {"n": self.ambient_n, "gens": [list(g.indices) for g in self.gens]}

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def minimize_generators(
    raw: Sequence[Monomial] | Sequence[Iterable[int]], ambient_n: int
) -> Ideal:
    """Canonical ideal from arbitrary generators: minimize to an antichain."""
    supports: list[Iterable[int]] = []
    for item in raw:
        if isinstance(item, Monomial):
            if item.ambient_n != ambient_n:
                raise AmbientMismatch("generator ambient differs from requested ambient")
            supports.append(item.indices)
        else:
            supports.append(item)
    return Ideal.from_supports(supports, ambient_n)
