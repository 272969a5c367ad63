"""Recursive computation of the refined boundary count of a degree.

Every rational tropical curve with prescribed end moments contains a unique
path, the chord, joining two chosen unbounded ends ``v1`` and ``vm``. When
the two chosen moments are pushed to infinity the surviving curves are read
off combinatorially: the remaining ends split into an ordered sequence of
blocks hanging off the chord, and the count factors over that sequence.

Concretely, for blocks ``B_1, ..., B_p`` partitioning the ends other than
``v1, vm`` set ``u_i = -sum(B_i)``, ``w_1 = -v1``, ``w_{i+1} = w_i + u_i``
and ``sigma_i = omega(w_i, w_{i+1})``. A sequence is admissible when every
``sigma_i`` is nonzero, ``sigma_i > 0`` forces ``B_i`` to be a singleton,
and ``omega(sigma_i u_i, sigma_{i+1} u_{i+1}) >= 0`` for consecutive
blocks. Each admissible sequence contributes the product of the quantum
integers ``[|sigma_i|]_q`` times the recursively computed counts of the
closed block degrees ``B_i + {u_i}``; a two-end degree counts 1.

Two bookkeeping rules make the sum count curves exactly once:

* Ends are distinguishable (each carries its own moment), so equal vectors
  distributed into different blocks give distinct curves. Decompositions
  are enumerated as sequences of vector multisets, and each carries an
  integer ``weight``: the number of ways to assign the labeled ends.
* Sequences differing only by reordering consecutive blocks with colinear
  ``u`` vectors describe the same curves (only one order has positive edge
  lengths at any given configuration). One representative per class is
  kept, blocks sorted within each colinear run, and the weight divides out
  permutations of identical blocks inside a run.

The value is independent of the choice of ``(v1, vm)``; the test suite
checks this rather than assuming it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import comb, factorial, gcd
from typing import Dict, Iterator, Optional, Sequence, Tuple

from .lattice import Degree, Vec, make_degree, omega
from .refined_poly import RefinedPolynomial, q_analog

Block = Tuple[Vec, ...]

_ONE = RefinedPolynomial.one()


class DegenerateBlock(ValueError):
    """A block of ends sums to zero, which would force a zero-slope edge."""


class VectorNotInDegree(ValueError):
    """The requested chord ends cannot be removed from the degree."""


@dataclass(frozen=True)
class ChordDecomposition:
    """One admissible ordered partition of the non-chord ends.

    ``blocks[i]`` is the i-th block (a sorted tuple of vectors), ``u[i]``
    its inward slope, ``w`` the chord slopes ``w_1 .. w_{p+1}``, and
    ``sigma[i]`` the signed multiplicity of the i-th chord vertex; the
    telescoping ``w[-1] == vm`` always holds. ``weight`` is the number of
    assignments of the labeled ends realizing this block sequence, after
    dividing out reorderings of identical blocks within colinear runs.
    """

    blocks: Tuple[Block, ...]
    u: Tuple[Vec, ...]
    w: Tuple[Vec, ...]
    sigma: Tuple[int, ...]
    weight: int = 1


def sub_degree(block: Sequence[Vec]) -> Degree:
    """Close a block of ends into a degree by appending the balancing vector.

    Raises :class:`DegenerateBlock` when the block sums to zero: the closing
    vector would be a zero slope, which no simple curve allows.
    """
    block = tuple(block)
    if not block:
        raise DegenerateBlock("empty block")
    sx = sum(v[0] for v in block)
    sy = sum(v[1] for v in block)
    if (sx, sy) == (0, 0):
        raise DegenerateBlock(f"block {block} sums to zero")
    return make_degree(block + ((-sx, -sy),))


def canonical_representative(blocks: Sequence[Block]) -> bool:
    """True iff a block sequence is the chosen representative of its class.

    Within every maximal run of consecutive blocks whose ``u`` vectors lie
    on one line through the origin, the blocks must appear in nondecreasing
    lexicographic order of their sorted vector lists; any sequence violating
    this is a reordering of the unique representative that satisfies it.
    """
    us = [_block_u(b) for b in blocks]
    keys = [tuple(sorted(b)) for b in blocks]
    for i in range(len(blocks) - 1):
        if omega(us[i], us[i + 1]) == 0 and keys[i + 1] < keys[i]:
            return False
    return True


def _block_u(block: Sequence[Vec]) -> Vec:
    return (-sum(v[0] for v in block), -sum(v[1] for v in block))


def _primitive(v: Vec) -> Vec:
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def _remove_ends(d: Degree, v1: Vec, vm: Vec) -> Counter:
    pool = Counter(d.vectors)
    for v in (v1, vm):
        if pool[v] <= 0:
            raise VectorNotInDegree(f"{v} cannot be removed from {d.vectors}")
        pool[v] -= 1
    return +pool


def _labeled_weight(pool: Counter, blocks: Sequence[Block], us: Sequence[Vec]) -> int:
    """Number of labeled-end assignments realizing a canonical block sequence.

    Multinomial per vector value, divided by k! for every group of k
    identical blocks inside a colinear run (those orders are identified).
    """
    weight = 1
    for v, total in pool.items():
        weight *= factorial(total)
        for b in blocks:
            weight //= factorial(sum(1 for x in b if x == v))
    i = 0
    while i < len(blocks):
        j = i + 1
        while (
            j < len(blocks)
            and blocks[j] == blocks[i]
            and omega(us[j - 1], us[j]) == 0
        ):
            j += 1
        weight //= factorial(j - i)
        i = j
    return weight


def enumerate_decompositions(d: Degree, v1: Vec, vm: Vec) -> Iterator[ChordDecomposition]:
    """Yield one representative per class of admissible chord decompositions.

    ``v1`` and ``vm`` must be removable instances of members of ``d`` (equal
    vectors are allowed when the multiplicity is at least 2), and ``d`` must
    have at least 3 ends; two-end degrees are the recursion's base case and
    are never decomposed. Enumeration is depth-first over block prefixes,
    pruning as soon as a sigma or consecutive-pair constraint fails.
    """
    if d.m < 3:
        raise ValueError("decompositions need at least 3 ends")
    pool = _remove_ends(d, v1, vm)
    pool_items = tuple(sorted(pool.items()))
    w1 = (-v1[0], -v1[1])
    for blocks, us, ws, sigmas in _search(pool_items, w1, None, None, (), (), (w1,), ()):
        assert ws[-1] == vm
        yield ChordDecomposition(
            blocks=blocks,
            u=us,
            w=ws,
            sigma=sigmas,
            weight=_labeled_weight(pool, blocks, us),
        )


def _search(pool, w, prev_su_dir, prev_key, blocks, us, ws, sigmas):
    """Depth-first enumeration over block prefixes with incremental pruning."""
    for block, rest, u in _sub_multisets(pool):
        sigma = omega(w, u)
        if sigma == 0:
            continue
        if sigma > 0 and len(block) > 1:
            continue
        if prev_su_dir is not None:
            cross = omega(prev_su_dir, u)
            if cross * sigma < 0:
                continue
            if cross == 0 and block < prev_key:
                continue
        w_next = (w[0] + u[0], w[1] + u[1])
        state = (
            blocks + (block,),
            us + (u,),
            ws + (w_next,),
            sigmas + (sigma,),
        )
        if not rest:
            yield state
        else:
            yield from _search(
                rest,
                w_next,
                _primitive((sigma * u[0], sigma * u[1])),
                block,
                *state,
            )


def _sub_multisets(pool):
    """All nonempty sub-multisets of ``pool`` with their complement and slope.

    ``pool`` is a sorted tuple of ``(vector, count)`` pairs; each choice
    yields ``(block, rest, u)`` where ``block`` is sorted and ``u`` is the
    balancing slope ``-sum(block)``.
    """
    vecs = [v for v, _ in pool]
    counts = [c for _, c in pool]
    for takes in product(*(range(c + 1) for c in counts)):
        if not any(takes):
            continue
        block = []
        ux = uy = 0
        for v, t in zip(vecs, takes):
            if t:
                block.extend((v,) * t)
                ux -= v[0] * t
                uy -= v[1] * t
        rest = tuple(
            (v, c - t) for v, c, t in zip(vecs, counts, takes) if c - t > 0
        )
        yield tuple(block), rest, (ux, uy)


def _default_ends(vectors: Tuple[Vec, ...]) -> Tuple[Vec, Vec]:
    """Pick chord ends minimizing the distinct vectors left in the pool.

    A coarse proxy for fewer decompositions; correctness never depends on
    the choice. Ties break lexicographically, so the pick is deterministic.
    """
    counts = Counter(vectors)
    values = sorted(counts)
    best = None
    for a in values:
        for b in values:
            if a == b and counts[a] < 2:
                continue
            distinct = sum(
                1 for v, c in counts.items() if c - (v == a) - (v == b) > 0
            )
            cand = (distinct, a, b)
            if best is None or cand < best:
                best = cand
    return best[1], best[2]


def refined_invariant(
    d: Degree,
    v1: Optional[Vec] = None,
    vm: Optional[Vec] = None,
    cache: Optional[Dict[str, RefinedPolynomial]] = None,
) -> RefinedPolynomial:
    """Refined count of rational tropical curves of degree ``d`` through
    generic boundary constraints.

    ``cache`` is an optional memo store mapping canonical degree keys to
    polynomials; it is consulted and updated for every sub-degree. When
    ``v1``/``vm`` are supplied the top-level value is recomputed from
    scratch with that chord (so end-choice invariance can be observed), but
    sub-degrees still go through the cache. Entries are only ever written
    with a degree's final value, so sharing a cache across threads is safe:
    concurrent duplicate work can happen, concurrent wrong answers cannot.
    """
    if cache is None:
        cache = {}
    if d.m == 2:
        return _ONE
    if v1 is None and vm is None:
        return _invariant(d.vectors, cache)
    pool = Counter(d.vectors)
    for v in (v1, vm):
        if v is not None:
            if pool[v] <= 0:
                raise VectorNotInDegree(f"{v} cannot be removed from {d.vectors}")
            pool[v] -= 1
    if v1 is None or vm is None:
        # one end fixed by the caller: partner it with the candidate that
        # leaves the fewest distinct vectors, ties broken lexicographically
        def leftover(v):
            return sum(1 for x, c in pool.items() if c - (x == v) > 0)

        partner = min(
            (v for v, c in pool.items() if c > 0), key=lambda v: (leftover(v), v)
        )
        if v1 is None:
            v1 = partner
        else:
            vm = partner
    # an explicit chord bypasses the top-level memo entry on purpose
    return _chord_sum(d.vectors, v1, vm, cache)


def _invariant(vectors: Tuple[Vec, ...], cache) -> RefinedPolynomial:
    if len(vectors) == 2:
        return _ONE
    key = ";".join(f"({x},{y})" for x, y in vectors)
    hit = cache.get(key)
    if hit is not None:
        return hit
    v1, vm = _default_ends(vectors)
    value = _chord_sum(vectors, v1, vm, cache)
    cache[key] = value
    return value


def _group_families(pool, block_counts, r):
    """Unordered families of ``r`` disjoint equal blocks drawn from ``pool``.

    ``block_counts`` maps each vector of the block to its count; the result
    is the exact integer ``prod_v C(pool_v, r*b_v) * (r*b_v)!/(b_v!^r)``
    collapsed as a running product of binomials divided by r!.
    """
    ways = 1
    remaining = dict(pool)
    for _ in range(r):
        for v, b in block_counts.items():
            ways *= comb(remaining[v], b)
            remaining[v] -= b
        if ways == 0:
            return 0
    return ways // factorial(r)


def _chord_sum(vectors, v1, vm, cache) -> RefinedPolynomial:
    """Sum the recursion over admissible decompositions of ``vectors``.

    Runs of identical blocks are chosen atomically (they share one sigma,
    since advancing ``w`` by ``u`` leaves ``omega(w, u)`` unchanged), with
    the exact count of unordered labeled families as integer weight. The
    choice of the next group only interacts with the past through the
    remaining pool, the direction of the previous ``sigma*u`` and the
    previous block key, so suffix sums are memoized on that state; the
    chord slope ``w`` is itself a function of the remaining pool.
    """
    pool = Counter(vectors)
    for v in (v1, vm):
        if pool[v] <= 0:
            raise VectorNotInDegree(f"{v} cannot be removed from {vectors}")
        pool[v] -= 1
    pool_items = tuple(sorted((+pool).items()))
    memo: Dict[tuple, RefinedPolynomial] = {}
    total_len = len(vectors)
    zero = RefinedPolynomial.zero()

    def suffix_sum(pool_items, w, prev_su_dir, prev_key):
        state = (pool_items, prev_su_dir, prev_key)
        hit = memo.get(state)
        if hit is not None:
            return hit
        total = zero
        for block, _rest, u in _sub_multisets(pool_items):
            sigma = omega(w, u)
            if sigma == 0:
                continue
            if sigma > 0 and len(block) > 1:
                continue
            if prev_su_dir is not None:
                cross = omega(prev_su_dir, u)
                if cross * sigma < 0:
                    continue
                if cross == 0 and block <= prev_key:
                    continue
            factor = q_analog(abs(sigma))
            if len(block) > 1:
                closed = block + ((u[0], u[1]),)
                assert len(closed) < total_len
                factor = factor * _invariant(tuple(sorted(closed)), cache)
            block_counts = Counter(block)
            pool_map = dict(pool_items)
            max_r = min(pool_map[v] // c for v, c in block_counts.items())
            su_dir = _primitive((sigma * u[0], sigma * u[1]))
            # identical blocks repeat with the same sigma; take r at once
            term = _ONE
            for r in range(1, max_r + 1):
                term = term * factor
                fam = _group_families(pool_map, block_counts, r)
                rest = tuple(
                    (v, c - r * block_counts.get(v, 0))
                    for v, c in pool_items
                    if c - r * block_counts.get(v, 0) > 0
                )
                if not rest:
                    assert (w[0] + r * u[0], w[1] + r * u[1]) == vm
                    total = total + fam * term
                else:
                    tail = suffix_sum(
                        rest,
                        (w[0] + r * u[0], w[1] + r * u[1]),
                        su_dir,
                        block,
                    )
                    total = total + fam * term * tail
        memo[state] = total
        return total

    return suffix_sum(pool_items, (-v1[0], -v1[1]), None, None)
