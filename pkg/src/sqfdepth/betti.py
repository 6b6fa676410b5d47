"""Multigraded Betti numbers of S/I via Hochster's formula, and what they imply.

For every multidegree sigma the Betti number in homological degree i is the
dimension of reduced homology of the induced Stanley-Reisner subcomplex on
sigma, in degree |sigma| - i - 1.  Subsets whose induced complex is a cone
are skipped: sigma survives only if it is the union of the generator
supports it contains.  Projective dimension is the top nonzero homological
degree; depth is ambient_n minus that (Auslander-Buchsbaum).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ZeroIdeal
from .homology import FieldSpec, homology_dims_from_faces
from .ideals import Ideal

# Hochster enumeration walks all 2^n multidegrees; refuse hopeless inputs.
MAX_HOCHSTER_AMBIENT = 24


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers of S/I over F_p.

    ``entries`` holds (i, sigma_mask, value) triples with value > 0, sorted
    by (i, sigma_mask).  The trivial beta_0 in multidegree 0 is omitted.
    """

    ambient_n: int
    field: FieldSpec
    entries: tuple[tuple[int, int, int], ...]

    def aggregated(self) -> dict[tuple[int, int], int]:
        """Coarse table beta_{i,j} = sum of multigraded values with |sigma| = j."""
        agg: dict[tuple[int, int], int] = {}
        for i, sigma, value in self.entries:
            key = (i, sigma.bit_count())
            agg[key] = agg.get(key, 0) + value
        return agg

    def proj_dim(self) -> int:
        return max(i for i, _, _ in self.entries)

    def regularity(self) -> int:
        return max(sigma.bit_count() - i for i, sigma, _ in self.entries)


def _survivors(n: int, gen_masks: tuple[int, ...]) -> np.ndarray:
    """Nonempty subsets that are unions of the generators they contain.

    Every other subset induces a cone (some vertex lies in no contained
    generator) and contributes nothing.
    """
    arr = np.arange(1 << n, dtype=np.uint32)
    union = np.zeros(1 << n, dtype=np.uint32)
    for g in gen_masks:
        union[(arr & g) == g] |= np.uint32(g)
    keep = (union == arr) & (arr != 0)
    return arr[keep]


def _global_faces(n: int, gen_masks: tuple[int, ...]) -> np.ndarray:
    arr = np.arange(1 << n, dtype=np.uint32)
    ok = np.ones(arr.shape, dtype=bool)
    for g in gen_masks:
        ok &= (arr & g) != g
    return arr[ok]


def _sigma_entries(
    sigma: int, faces: np.ndarray, face_sizes: np.ndarray, p: int
) -> list[tuple[int, int, int]]:
    inv = np.uint32(((1 << 32) - 1) ^ sigma)
    sel = (faces & inv) == 0
    sub = faces[sel].tolist()
    sizes = face_sizes[sel].tolist()
    width = sigma.bit_count()
    groups: list[list[int]] = [[] for _ in range(width + 1)]
    for m, s in zip(sub, sizes):
        groups[s].append(m)
    dims = homology_dims_from_faces(groups, p)
    out = []
    for s, dim in enumerate(dims):
        i = width - s
        if dim > 0 and i >= 1:
            out.append((i, sigma, dim))
    return out


def betti_table(ideal: Ideal, field: FieldSpec = FieldSpec(2), threads: int = 1) -> BettiTable:
    """All nonzero multigraded Betti numbers of S/I over F_p.

    Subsets are processed in ascending mask order and merged positionally,
    so the result is bit-identical for every thread count.
    """
    if ideal.is_zero:
        raise ZeroIdeal("Betti table of S requested; the zero ideal has no table")
    n = ideal.ambient_n
    if n > MAX_HOCHSTER_AMBIENT:
        raise ValueError(
            f"Hochster enumeration needs 2^n subsets; n={n} exceeds {MAX_HOCHSTER_AMBIENT}"
        )
    gen_masks = ideal.gen_masks()
    survivors = _survivors(n, gen_masks)
    faces = _global_faces(n, gen_masks)
    face_sizes = np.bitwise_count(faces)
    p = field.characteristic
    sigmas = survivors.tolist()

    if threads > 1 and len(sigmas) > 1:
        chunk = max(8, len(sigmas) // (threads * 4))
        blocks = [sigmas[i : i + chunk] for i in range(0, len(sigmas), chunk)]

        def run(block: list[int]) -> list[tuple[int, int, int]]:
            found = []
            for sigma in block:
                found.extend(_sigma_entries(sigma, faces, face_sizes, p))
            return found

        entries: list[tuple[int, int, int]] = []
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for block_entries in pool.map(run, blocks):
                entries.extend(block_entries)
    else:
        entries = []
        for sigma in sigmas:
            entries.extend(_sigma_entries(sigma, faces, face_sizes, p))

    entries.sort(key=lambda e: (e[0], e[1]))
    return BettiTable(n, field, tuple(entries))


def proj_dim(ideal: Ideal, field: FieldSpec = FieldSpec(2), threads: int = 1) -> int:
    """Projective dimension of S/I: the top homological degree in the table."""
    if ideal.is_zero:
        raise ZeroIdeal("projective dimension of S requested")
    return betti_table(ideal, field, threads).proj_dim()


def depth(ideal: Ideal, field: FieldSpec = FieldSpec(2), threads: int = 1) -> int:
    """depth(S/I) = ambient_n - proj_dim; the zero ideal gets depth ambient_n."""
    if ideal.is_zero:
        return ideal.ambient_n
    return ideal.ambient_n - proj_dim(ideal, field, threads)


def regularity(ideal: Ideal, field: FieldSpec = FieldSpec(2), threads: int = 1) -> int:
    """Castelnuovo-Mumford regularity: max(j - i) over nonzero beta_{i,j}."""
    if ideal.is_zero:
        raise ZeroIdeal("regularity of S requested")
    return betti_table(ideal, field, threads).regularity()


@dataclass(frozen=True)
class GRow:
    k: int
    d_k: int
    depth: int
    g: int


@dataclass(frozen=True)
class GProfile:
    """The normalized depth function g(k) = depth(S/I^[k]) - (d_k - 1), k = 1..nu."""

    nu: int
    rows: tuple[GRow, ...]

    @property
    def g_values(self) -> tuple[int, ...]:
        return tuple(r.g for r in self.rows)

    def violations(self) -> list[int]:
        """Positions k with g(k+1) > g(k)."""
        g = self.g_values
        return [k for k in range(1, len(g)) if g[k] > g[k - 1]]

    def to_json_dict(self) -> dict:
        return {
            "nu": self.nu,
            "profile": [
                {"k": r.k, "d_k": r.d_k, "depth": r.depth, "g": r.g} for r in self.rows
            ],
        }


def g_profile(ideal: Ideal, field: FieldSpec = FieldSpec(2), threads: int = 1) -> GProfile:
    """Normalized depth function of a nonzero squarefree ideal."""
    if ideal.is_zero:
        raise ZeroIdeal("g profile undefined for the zero ideal")
    nu = ideal.nu()
    rows = []
    for k in range(1, nu + 1):
        power = ideal.squarefree_power(k)
        d_k = power.min_gen_degree()
        depth_k = depth(power, field, threads)
        rows.append(GRow(k, d_k, depth_k, depth_k - (d_k - 1)))
    return GProfile(nu, tuple(rows))


@dataclass(frozen=True)
class DepthReport:
    """Summary invariants of S/I over one prime field.

    ``betti`` is the aggregated table as (i, j, value) triples.  When the
    report was cross-checked at a second prime, ``field_sensitive`` records
    whether the two tables disagreed.
    """

    ambient_n: int
    field: FieldSpec
    depth: int
    proj_dim: int
    regularity: int
    betti: tuple[tuple[int, int, int], ...]
    field_sensitive: bool = False

    def __post_init__(self) -> None:
        assert self.depth + self.proj_dim == self.ambient_n

    def to_json_dict(self) -> dict:
        return {
            "n": self.ambient_n,
            "field_char": self.field.characteristic,
            "betti": [{"i": i, "j": j, "value": v} for i, j, v in self.betti],
            "proj_dim": self.proj_dim,
            "depth": self.depth,
            "regularity": self.regularity,
            "field_sensitive": self.field_sensitive,
        }


def _aggregated_triples(table: BettiTable) -> tuple[tuple[int, int, int], ...]:
    agg = table.aggregated()
    return tuple((i, j, agg[(i, j)]) for i, j in sorted(agg))


def depth_report(
    ideal: Ideal,
    field: FieldSpec = FieldSpec(2),
    both_primes: bool = False,
    threads: int = 1,
) -> DepthReport:
    """DepthReport over ``field``; with both_primes, flag p=2 vs p=3 disagreement."""
    if ideal.is_zero:
        return DepthReport(ideal.ambient_n, field, ideal.ambient_n, 0, 0, ())
    table = betti_table(ideal, field, threads)
    triples = _aggregated_triples(table)
    sensitive = False
    if both_primes:
        other = FieldSpec(3 if field.characteristic == 2 else 2)
        other_table = betti_table(ideal, other, threads)
        sensitive = _aggregated_triples(other_table) != triples
    return DepthReport(
        ideal.ambient_n,
        field,
        ideal.ambient_n - table.proj_dim(),
        table.proj_dim(),
        table.regularity(),
        triples,
        sensitive,
    )
