"""Ground-truth dominating-set counting by subset enumeration.

This is the reference everything else is checked against, so it stays
deliberately dumb: walk every nonempty vertex subset as a bitmask, OR the
closed neighborhoods together, compare with the full-vertex mask. Two
half-subset lookup tables make the per-mask work constant, and the mask
range splits into contiguous chunks whose per-size counts add up, so the
walk parallelizes without changing the answer.

The enumeration is 2^n, so orders above a guard (default 24, ~16M masks)
are refused unless the caller raises the guard explicitly.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from .errors import SizeGuardError
from .graphs import Graph
from .polynomials import IntPolynomial

__all__ = [
    "DEFAULT_GUARD",
    "domination_profile",
    "domination_polynomial",
    "domination_number",
]

DEFAULT_GUARD = 24

# Below this order the pool startup costs more than the enumeration.
_PARALLEL_MIN_ORDER = 14


def _check_guard(n: int, guard: int):
    if n > guard:
        raise SizeGuardError(
            f"order {n} exceeds the enumeration guard ({guard}); raise it via "
            f"the guard argument (CLI: --guard-override)"
        )


def _half_tables(closed: tuple[int, ...], n: int) -> tuple[list[int], list[int], int]:
    """Coverage masks for every subset of the low and high vertex halves."""
    h = (n + 1) // 2
    low = [0] * (1 << h)
    for s in range(1, 1 << h):
        v = (s & -s).bit_length() - 1
        low[s] = low[s & (s - 1)] | closed[v]
    high = [0] * (1 << (n - h))
    for s in range(1, 1 << (n - h)):
        v = (s & -s).bit_length() - 1
        high[s] = high[s & (s - 1)] | closed[h + v]
    return low, high, h


def _count_chunk(closed: tuple[int, ...], n: int, lo: int, hi: int) -> list[int]:
    """Per-size counts of dominating sets among masks in [lo, hi)."""
    low, high, h = _half_tables(closed, n)
    full = (1 << n) - 1
    low_mask = (1 << h) - 1
    counts = [0] * (n + 1)
    for m in range(lo, hi):
        if low[m & low_mask] | high[m >> h] == full:
            counts[m.bit_count()] += 1
    return counts


def domination_profile(
    g: Graph,
    *,
    guard: int = DEFAULT_GUARD,
    threads: int = 1,
    chunks: int | None = None,
) -> tuple[int, ...]:
    """Exact counts (d(G,1), ..., d(G,n)) by brute-force enumeration.

    `chunks` splits the mask range for parallel workers; the merged result
    is identical for any chunk count. The null graph yields ().
    """
    n = g.n
    _check_guard(n, guard)
    if n == 0:
        return ()
    if chunks is None:
        chunks = max(1, threads)
    total = 1 << n
    bounds = [total * i // chunks for i in range(chunks + 1)]
    jobs = [
        (g.closed, n, max(1, bounds[i]), bounds[i + 1])
        for i in range(chunks)
        if bounds[i + 1] > max(1, bounds[i])
    ]
    if threads > 1 and n >= _PARALLEL_MIN_ORDER and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(_count_chunk_star, jobs))
    else:
        partials = [_count_chunk(*job) for job in jobs]
    merged = [0] * (n + 1)
    for part in partials:
        for i, c in enumerate(part):
            merged[i] += c
    return tuple(merged[1:])


def _count_chunk_star(job):
    return _count_chunk(*job)


def domination_polynomial(
    g: Graph,
    *,
    guard: int = DEFAULT_GUARD,
    threads: int = 1,
    use_components: bool = False,
) -> IntPolynomial:
    """Brute-force domination polynomial; constant 1 for the null graph.

    The null-graph convention makes the components product law hold with
    an empty product. With `use_components` the graph is factored into
    connected components first and the per-component polynomials are
    multiplied; the raw single-pass enumeration stays the default so an
    independent ground truth is always available.
    """
    _check_guard(g.n, guard)
    if g.n == 0:
        return IntPolynomial.one()
    if use_components:
        comps = g.component_masks()
        if len(comps) > 1:
            result = IntPolynomial.one()
            for mask in comps:
                sub = g.induced_subgraph(mask)
                result = result * domination_polynomial(
                    sub, guard=guard, threads=threads
                )
            return result
    counts = domination_profile(g, guard=guard, threads=threads)
    return IntPolynomial((0,) + counts)


def domination_number(g: Graph, *, guard: int = DEFAULT_GUARD) -> int | None:
    """Least size of a dominating set, or None for the null graph.

    Walks subset sizes in ascending order and stops at the first hit, so
    it is much cheaper than the full profile when gamma is small.
    """
    n = g.n
    _check_guard(n, guard)
    if n == 0:
        return None
    full = (1 << n) - 1
    single = [g.closed[v] for v in range(n)]
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            cover = 0
            for v in combo:
                cover |= single[v]
            if cover == full:
                return size
    raise AssertionError("unreachable: the full vertex set always dominates")
