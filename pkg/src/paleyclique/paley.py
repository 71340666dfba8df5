"""The Paley graph P(q^2): adjacency oracle and clique/independent-set predicates."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache

from .errors import KindMismatch, SelfLoop
from .gf_ext import ExtElement, ExtField, make_extension


class Kind(str, Enum):
    CLIQUE = "Clique"
    INDEPENDENT = "Independent"
    NEITHER = "Neither"


@dataclass(frozen=True)
class VertexSet:
    elements: frozenset
    kind: Kind
    maximal: bool | None = None
    certificate: ExtElement | None = None

    def __len__(self):
        return len(self.elements)

    def sorted(self) -> list[ExtElement]:
        return sorted(self.elements, key=lambda g: g.index)


class PaleyGraph:
    """Vertices are the elements of GF(q^2); u ~ v iff u - v is a nonzero square.

    Adjacency goes through the square bitmap of the field, indexed by the
    canonical index of the difference, so no adjacency matrix is stored.
    """

    def __init__(self, field: ExtField):
        self.field = field
        self.q = field.q
        self.n = field.size
        self.squares = field.square_bitmap

    def sub_index(self, i: int, j: int) -> int:
        q = self.q
        yi, xi = divmod(i, q)
        yj, xj = divmod(j, q)
        F = self.field.base
        if F.e == 1:
            return (xi - xj) % q + q * ((yi - yj) % q)
        return F.sub(xi, xj) + q * F.sub(yi, yj)

    def adjacent_index(self, i: int, j: int) -> bool:
        return bool(self.squares[self.sub_index(i, j)])

    def adjacent(self, u: ExtElement, v: ExtElement) -> bool:
        if u == v:
            raise SelfLoop("adjacency of a vertex with itself is undefined")
        return bool(self.squares[(u - v).index])

    def neighbourhood_mask(self, v: int, within) -> int:
        """Bitmask over positions of ``within`` (a list of indices) adjacent to vertex ``v``."""
        sq = self.squares
        sub = self.sub_index
        mask = 0
        for pos, w in enumerate(within):
            if w != v and sq[sub(w, v)]:
                mask |= 1 << pos
        return mask

    @cached_property
    def neighbour_sets(self) -> list[int]:
        """Full adjacency as one bitmask per vertex; only sensible for small q."""
        everything = list(range(self.n))
        return [self.neighbourhood_mask(v, everything) for v in everything]

    def degree(self, v: int) -> int:
        sq = self.squares
        return sum(sq[self.sub_index(w, v)] for w in range(self.n) if w != v)

    # -- set predicates ------------------------------------------------

    def kind_of(self, S) -> Kind:
        S = list(S)
        edges = non_edges = 0
        for a in range(len(S)):
            for b in range(a + 1, len(S)):
                if self.adjacent(S[a], S[b]):
                    edges += 1
                else:
                    non_edges += 1
                if edges and non_edges:
                    return Kind.NEITHER
        if non_edges:
            return Kind.INDEPENDENT
        return Kind.CLIQUE

    def classify_set(self, S) -> VertexSet:
        S = frozenset(S)
        if not S:
            raise ValueError("classify_set needs a nonempty set")
        return VertexSet(S, self.kind_of(S))

    def extension_vertex(self, S, kind: Kind) -> ExtElement | None:
        """First vertex (by index) outside ``S`` that extends it as a set of ``kind``."""
        want = kind is Kind.CLIQUE
        idx = sorted(g.index for g in S)
        members = set(idx)
        sq = self.squares
        sub = self.sub_index
        for w in range(self.n):
            if w in members:
                continue
            if all(bool(sq[sub(w, s)]) == want for s in idx):
                return self.field.from_index(w)
        return None

    def is_maximal(self, S, kind: Kind | None = None) -> VertexSet:
        """Certify maximality; a non-maximal set comes back with an extending vertex."""
        S = frozenset(S)
        actual = self.kind_of(S)
        if kind is None:
            kind = actual
        if actual is Kind.NEITHER or (actual is not kind and len(S) > 1):
            raise KindMismatch(f"set is {actual.value}, not {kind.value}")
        w = self.extension_vertex(S, kind)
        return VertexSet(S, kind, w is None, w)

    # -- global properties ---------------------------------------------

    def self_complement_witness(self, exhaustive: bool | None = None, samples: int = 10_000, seed: int = 0):
        """Check that multiplication by a non-square swaps edges and non-edges.

        Returns ``(multiplier, checked_pairs, failures)``; ``failures`` lists
        offending pairs (empty on success).
        """
        E = self.field
        n_mul = E.beta  # a generator is a non-square
        if exhaustive is None:
            exhaustive = self.q <= 13
        elems = E.elements()
        if exhaustive:
            pairs = ((elems[i], elems[j]) for i in range(self.n) for j in range(i + 1, self.n))
        else:
            rng = random.Random(seed)
            pairs = []
            while len(pairs) < samples:
                i, j = rng.randrange(self.n), rng.randrange(self.n)
                if i != j:
                    pairs.append((elems[i], elems[j]))
        checked = 0
        failures = []
        for u, v in pairs:
            checked += 1
            if self.adjacent(u, v) == self.adjacent(n_mul * u, n_mul * v):
                failures.append((u, v))
        return n_mul, checked, failures

    def srg_parameters(self) -> tuple[int, set, set, set]:
        """Observed (n, degrees, lambdas, mus) by exhaustive sweep; small q only."""
        nb = self.neighbour_sets
        degrees = {bin(m).count("1") for m in nb}
        lambdas, mus = set(), set()
        for u in range(self.n):
            for v in range(u + 1, self.n):
                c = bin(nb[u] & nb[v]).count("1")
                (lambdas if nb[u] >> v & 1 else mus).add(c)
        return self.n, degrees, lambdas, mus

    def all_cliques_of_size(self, k: int):
        """Yield every clique of exactly ``k`` vertices (as sorted index tuples); brute force."""
        nb = self.neighbour_sets

        def grow(clique, cand):
            if len(clique) == k:
                yield tuple(clique)
                return
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                # only later vertices, so each clique appears once
                yield from grow(clique + [v], cand & nb[v])

        yield from grow([], (1 << self.n) - 1)

    def clique_number(self) -> int:
        nb = self.neighbour_sets
        best = 0

        def grow(size, cand):
            nonlocal best
            if size > best:
                best = size
            while cand:
                if size + bin(cand).count("1") <= best:
                    return
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                grow(size + 1, cand & nb[v])

        grow(0, (1 << self.n) - 1)
        return best


@lru_cache(maxsize=None)
def paley_graph(q: int, d: int | None = None) -> PaleyGraph:
    return PaleyGraph(make_extension(q, d))
