"""Independent brute-force oracles.

Nothing here goes through the norm criterion, the discrete-log tables, the
square bitmap, or the census search: squares are found by squaring every
element, cliques by testing subsets, orbits by applying every automorphism.
"""

from __future__ import annotations

from itertools import combinations


def squares_by_squaring(E):
    return {(g * g).index for g in E.units()}


def euler_is_square(g):
    """Euler's criterion g^((q^2-1)/2) == 1 by repeated squaring."""
    E = g.field
    return g ** ((E.size - 1) // 2) == E.one


class NaiveGraph:
    def __init__(self, E):
        self.E = E
        self.sq = squares_by_squaring(E)
        self.elems = list(E.elements())

    def adj(self, u, v):
        return (u - v).index in self.sq

    def is_clique(self, S):
        return all(self.adj(u, v) for u, v in combinations(S, 2))

    def is_maximal_clique(self, S):
        Sset = set(S)
        return not any(w not in Sset and all(self.adj(w, s) for s in S) for w in self.elems)


def naive_target_cliques(E, size):
    """All maximal cliques of ``size`` containing 0 and 1, testing every subset of N(0) & N(1)."""
    G = NaiveGraph(E)
    zero, one = E.zero, E.one
    common = [w for w in G.elems if w not in (zero, one) and G.adj(w, zero) and G.adj(w, one)]
    out = []
    for sub in combinations(common, size - 2):
        if not G.is_clique(sub):
            continue
        C = (zero, one) + sub
        if G.is_maximal_clique(C):
            out.append(tuple(sorted(g.index for g in C)))
    return sorted(out)


def all_automorphisms(E):
    """Every map g -> a*g^(p^i) + b with a a nonzero square (a found by squaring)."""
    squares = {g * g for g in E.units()}
    exps = [E.p ** i for i in range(2 * E.e)]
    return [(a, k, b) for a in squares for k in exps for b in E.elements()]


def naive_orbits(E, cliques):
    """Partition ``cliques`` (sorted index tuples through 0 and 1) by brute-force Aut action."""
    squares = sorted({g * g for g in E.units()}, key=lambda g: g.index)
    exps = [E.p ** i for i in range(2 * E.e)]
    remaining = set(cliques)
    orbits = []
    elems = E.elements()
    for c in sorted(cliques):
        if c not in remaining:
            continue
        C = [elems[i] for i in c]
        seen = set()
        for k in exps:
            powered = [g ** k for g in C]
            for a in squares:
                scaled = [a * g for g in powered]
                for b in elems:
                    img = tuple(sorted((h + b).index for h in scaled))
                    if img in remaining:
                        seen.add(img)
        remaining -= seen
        orbits.append(sorted(seen))
    return orbits


def brute_clique_number(E):
    """Largest clique by trying k-subsets of N(0) (vertex-transitivity puts 0 in some maximum clique)."""
    G = NaiveGraph(E)
    nbrs = [w for w in G.elems if w != E.zero and G.adj(w, E.zero)]
    best = 1
    k = 1
    while True:
        if not any(G.is_clique(sub) for sub in combinations(nbrs, k)):
            return best
        best = k + 1
        k += 1


def smallest_primitive_root(p):
    for g in range(2, p):
        if len({pow(g, k, p) for k in range(1, p)}) == p - 1:
            return g
