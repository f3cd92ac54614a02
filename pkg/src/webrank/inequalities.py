"""Constructors for the named inequality families.

Rank constraints x(V) <= alpha(G); Dahl's 1-interval inequalities
x(T) <= alpha(T) for W_n^2, where T is a union of circular intervals
I_1, ..., I_t separated by singletons and |I_j| = 3 k_j + 1 with t >= 3
odd; antiweb constraints x(V(A_n^k)) <= k (prime when gcd(n,k) = 1);
and joined inequalities sum x(V(A_i)) / alpha(A_i) <= 1 over the blocks
of a complete join.

The 1-interval right-hand side is computed by the closed form
sum k_j + (t-1)/2 AND cross-checked against the enumerated stability
number of the induced subgraph; a mismatch is a hard error, never a
silently emitted row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .graphs import (
    AntiwebId,
    Graph,
    WebId,
    alpha,
    alpha_induced,
    as_nodeset,
    induced_subgraph,
    mod1,
    web,
)
from .polyhedra import HPolytope, LinearInequality, qstab


def rank_constraint(g: Graph, stab_bound: int = 18) -> LinearInequality:
    """x(V) <= alpha(G), all-ones coefficients."""
    return LinearInequality({v: 1 for v in g.nodes}, alpha(g, stab_bound), tag="rank")


def antiweb_constraint(a: AntiwebId):
    """The rank constraint x(V(A_n^k)) <= k, plus the prime flag."""
    row = LinearInequality({v: 1 for v in range(1, a.n + 1)}, a.k, tag="antiweb")
    return row, a.prime


# ---------------------------------------------------------------------------
# 1-interval sets (Dahl's description of STAB(W_n^2))

@dataclass(frozen=True)
class OneIntervalSet:
    """Circular partition I_1,J_1,...,I_t,J_t with |J_j|=1, |I_j|=3k_j+1.

    T is the union of the intervals; the singletons separate them.
    """

    n: int
    intervals: tuple          # tuple of node tuples, circular order
    singletons: tuple         # one node after each interval

    def __post_init__(self):
        t = len(self.intervals)
        if t < 3 or t % 2 == 0:
            raise ValueError(f"need t >= 3 odd intervals, got t={t}")
        if len(self.singletons) != t:
            raise ValueError("need exactly one singleton per interval")
        covered = []
        for iv, j in zip(self.intervals, self.singletons):
            if (len(iv) - 1) % 3 != 0:
                raise ValueError(f"interval size {len(iv)} is not 1 mod 3")
            covered.extend(iv)
            covered.append(j)
        if sorted(covered) != list(range(1, self.n + 1)):
            raise ValueError("blocks do not partition 1..n")
        # circular consecutiveness in order I_1, J_1, ..., I_t, J_t
        flat = []
        for iv, j in zip(self.intervals, self.singletons):
            flat.extend(iv)
            flat.append(j)
        start = flat[0]
        expect = [mod1(start + i, self.n) for i in range(self.n)]
        if flat != expect:
            raise ValueError("blocks are not circularly consecutive in order")

    @property
    def t(self) -> int:
        return len(self.intervals)

    @property
    def k_values(self) -> tuple:
        return tuple((len(iv) - 1) // 3 for iv in self.intervals)

    @property
    def T(self) -> tuple:
        return as_nodeset(v for iv in self.intervals for v in iv)

    def closed_form_alpha(self) -> int:
        return sum(self.k_values) + (self.t - 1) // 2


def one_interval_set(n: int, sizes, start: int) -> OneIntervalSet:
    """Blocks of the given interval sizes, I_1 starting at `start`."""
    intervals, singletons = [], []
    p = start
    for s in sizes:
        intervals.append(tuple(mod1(p + i, n) for i in range(s)))
        p += s
        singletons.append(mod1(p, n))
        p += 1
    return OneIntervalSet(n, tuple(intervals), tuple(singletons))


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_one_interval_sets(n: int, dedup_by_T: bool = True) -> list:
    """All 1-interval configurations on W_n^2, rotations included.

    Different block partitions can induce the same T; dedup_by_T keeps
    one representative per T (the inequality depends only on T).
    """
    if n < 6:
        raise ValueError("1-interval sets need n >= 6")
    out = []
    seen = set()
    t = 3
    while 2 * t <= n:
        need = n - 2 * t              # sum of k_j interval surplus: 3*sum(k) = n-2t
        if need >= 0 and need % 3 == 0:
            ksum = need // 3
            for comp in _compositions(ksum, t):
                sizes = tuple(3 * k + 1 for k in comp)
                for start in range(1, n + 1):
                    s = one_interval_set(n, sizes, start)
                    if dedup_by_T:
                        if s.T in seen:
                            continue
                        seen.add(s.T)
                    out.append(s)
        t += 2
    return out


def one_interval_inequality(w: WebId, s: OneIntervalSet,
                            stab_bound: int = 18) -> LinearInequality:
    """x(T) <= alpha(T) on W_n^2, rhs by the closed form AND enumeration.

    Refuses to emit the row when the closed form disagrees with the
    enumerated stability number of the induced subgraph.
    """
    if w.k != 2:
        raise ValueError("1-interval inequalities are defined for webs with k=2")
    if w.n != s.n:
        raise ValueError(f"set lives on n={s.n}, web has n={w.n}")
    rhs = s.closed_form_alpha()
    enumerated = alpha_induced(web(w.n, 2), s.T, stab_bound)
    if rhs != enumerated:
        raise RuntimeError(
            f"1-interval rhs mismatch on T={s.T}: closed form {rhs}, "
            f"enumerated {enumerated}")
    return LinearInequality({v: 1 for v in s.T}, rhs, tag="one-interval")


def stab_description_w2(n: int, stab_bound: int = 18) -> list:
    """Dahl's full description of STAB(W_n^2) as a row list.

    Nonnegativity, maximal clique rows, the rank constraint when n is
    not a multiple of 3, and all 1-interval rows (dedup by T).
    """
    if n < 6:
        raise ValueError("needs n >= 6")
    g = web(n, 2)
    rows = list(qstab(g).rows)
    if n % 3 != 0:
        rows.append(rank_constraint(g, stab_bound))
    w = WebId(n, 2)
    for s in enumerate_one_interval_sets(n, dedup_by_T=True):
        rows.append(one_interval_inequality(w, s, stab_bound))
    # drop duplicates (triangle-sized intervals reproduce clique rows)
    uniq, seen = [], set()
    for r in rows:
        if r not in seen:
            seen.add(r)
            uniq.append(r)
    return uniq


def stab_description_w2_polytope(n: int, stab_bound: int = 18) -> HPolytope:
    return HPolytope(tuple(range(1, n + 1)), stab_description_w2(n, stab_bound))


# ---------------------------------------------------------------------------
# complete joins

@dataclass(frozen=True)
class JoinBlocks:
    """Verified complete-join decomposition of a host graph.

    blocks are disjoint node tuples with every cross-block pair
    adjacent; tags name each block ("A:n:k", "K:n", ...) when known.
    """

    host: Graph
    blocks: tuple
    tags: tuple

    def __post_init__(self):
        seen = set()
        for blk in self.blocks:
            if set(blk) & seen:
                raise ValueError("join blocks are not disjoint")
            seen |= set(blk)
        if seen != set(self.host.nodes):
            raise ValueError("join blocks do not cover the host graph")
        for i, b1 in enumerate(self.blocks):
            for b2 in self.blocks[i + 1:]:
                for u in b1:
                    for v in b2:
                        if not self.host.has_edge(u, v):
                            raise ValueError(
                                f"join witness fails: {u} and {v} are in "
                                f"different blocks but not adjacent")

    def block_graphs(self):
        return [induced_subgraph(self.host, blk) for blk in self.blocks]


def join_blocks_of(host: Graph) -> JoinBlocks:
    """Read the recorded block metadata off a graph built by complete_join."""
    if not host.blocks:
        raise ValueError("graph carries no join block metadata")
    return JoinBlocks(host, host.blocks, host.block_tags or (None,) * len(host.blocks))


def joined_inequality(blocks: JoinBlocks, stab_bound: int = 18) -> LinearInequality:
    """sum_i x(V(A_i)) / alpha(A_i) <= 1 over the verified join blocks."""
    coeffs = {}
    for blk, bg in zip(blocks.blocks, blocks.block_graphs()):
        a = alpha(bg, stab_bound)
        for v in blk:
            coeffs[v] = Fraction(1, a)
    return LinearInequality(coeffs, 1, tag="joined")


# ---------------------------------------------------------------------------
# provenance tagging for hull output

def tag_inequality(g: Graph, ineq: LinearInequality, stab_bound: int = 18) -> str:
    """Best-effort family tag for a facet produced by the hull code."""
    ints, rhs = ineq.integer_form()
    if len(ints) == 1:
        (v, c), = ints.items()
        if c == -1 and rhs == 0:
            return "nonneg"
    if all(c == 1 for c in ints.values()) and rhs == 1:
        sup = list(ints)
        if all(g.has_edge(u, v) for i, u in enumerate(sup) for v in sup[i + 1:]):
            return "clique"
    if set(ints) == set(g.nodes) and all(c == 1 for c in ints.values()):
        if rhs == alpha(g, stab_bound):
            return "rank"
    if all(c == 1 for c in ints.values()) and rhs == alpha_induced(g, list(ints), stab_bound):
        return "one-interval" if len(ints) < g.n else "rank"
    return "other"
