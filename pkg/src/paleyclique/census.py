"""Census of maximal cliques of size (q + q mod 4)/2 up to automorphisms of P(q^2).

Every automorphism is ``g -> a*g^eps + b`` with ``a`` a nonzero square, and
the group is arc-transitive, so each orbit of cliques meets the set of
cliques through the arc (0, 1).  The search therefore enumerates maximal
cliques of the subgraph induced on the common neighbourhood of 0 and 1;
``{0, 1}`` plus such a clique is maximal in P(q^2) exactly when the clique
is maximal in that subgraph.

Two cliques through (0, 1) lie in one orbit iff their :func:`canonical_form`
agree: the stabiliser of the arc is the Galois group, so renormalising at
every ordered pair of the clique and applying every field automorphism
sweeps the whole orbit's intersection with "contains 0 and 1".
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .constructions import all_constructions, target_size
from .errors import BudgetExhausted, NotAClique, NotAnArc
from .gf_ext import ExtElement, ExtField
from .paley import Kind, PaleyGraph, paley_graph

CACHE_VERSION = 1


@dataclass(frozen=True)
class AutMap:
    """``g -> a * g**(p**i) + b``."""

    a: ExtElement
    b: ExtElement
    i: int = 0

    def __post_init__(self):
        if not self.a or not self.a.field.is_square_by_norm(self.a):
            raise ValueError("multiplier of an automorphism must be a nonzero square")

    @property
    def eps(self) -> int:
        return self.a.field.p ** self.i

    def __call__(self, g: ExtElement) -> ExtElement:
        return self.a * self.a.field.frobenius(g, self.i) + self.b

    def apply(self, S):
        return frozenset(self(g) for g in S)

    def compose(self, other: "AutMap") -> "AutMap":
        """``self after other``."""
        E = self.a.field
        a = self.a * E.frobenius(other.a, self.i)
        b = self.a * E.frobenius(other.b, self.i) + self.b
        return AutMap(a, b, (self.i + other.i) % (2 * E.e))

    def inverse(self) -> "AutMap":
        E = self.a.field
        j = (-self.i) % (2 * E.e)
        a_inv = self.a.inverse()
        return AutMap(E.frobenius(a_inv, j), -E.frobenius(self.b * a_inv, j), j)


def arc_normalizer(G: PaleyGraph, u: ExtElement, v: ExtElement) -> AutMap:
    """The automorphism ``g -> (g - u)/(v - u)`` taking u to 0 and v to 1."""
    if u == v or not G.adjacent(u, v):
        raise NotAnArc("u and v must be distinct adjacent vertices")
    inv = (v - u).inverse()
    return AutMap(inv, -u * inv, 0)


def canonical_form(G: PaleyGraph, C) -> tuple[int, ...]:
    """Lexicographically least sorted index tuple over all arc-normalised Galois images of ``C``."""
    C = list(C)
    if len(C) < 2:
        raise NotAClique("canonical form needs at least two vertices")
    if G.kind_of(C) is not Kind.CLIQUE:
        raise NotAClique("set is not a clique")
    E = G.field
    q = E.q
    n_gal = 2 * E.e
    best = None
    # Galois images of the clique once; normalisation commutes up to relabelling
    conj = [[E.frobenius(g, i) for g in C] for i in range(n_gal)]
    for img in conj:
        for u in img:
            shifted = [g - u for g in img]
            for w in shifted:
                if not w:
                    continue
                winv = w.inverse()
                key = sorted((g * winv).index for g in shifted)
                key = tuple(key)
                if best is None or key < best:
                    best = key
    return best


@dataclass
class SearchStats:
    nodes: int = 0
    tasks: int = 0


class CliqueSearch:
    """Maximal cliques of exactly ``t`` vertices in the common neighbourhood of 0 and 1."""

    def __init__(self, G: PaleyGraph):
        self.G = G
        E = G.field
        self.s = target_size(E.q)
        self.t = self.s - 2
        zero, one = 0, E.one.index
        sq, sub = G.squares, G.sub_index
        self.H = [w for w in range(G.n) if w not in (zero, one) and sq[sub(w, zero)] and sq[sub(w, one)]]
        self.nb = [G.neighbourhood_mask(v, self.H) for v in self.H]
        self.stats = SearchStats()
        self._deadline = None

    # bounds ----------------------------------------------------------

    def _colour_bound(self, P: int, need: int) -> bool:
        """True if a greedy colouring of P uses at least ``need`` colours."""
        nb = self.nb
        k = 0
        U = P
        while U:
            k += 1
            if k >= need:
                return True
            Q = U
            while Q:
                low = Q & -Q
                U ^= low
                Q &= ~nb[low.bit_length() - 1]
                Q &= ~low
        return False

    def _expand(self, size: int, P: int, X: int, R: list, out: list):
        st = self.stats
        st.nodes += 1
        if self._deadline is not None and st.nodes & 0x3FF == 0 and time.monotonic() > self._deadline:
            raise BudgetExhausted("census budget exhausted")
        t = self.t
        if not P:
            if not X and size == t:
                out.append(tuple(R))
            return
        if size == t:
            return
        need = t - size
        if P.bit_count() < need:
            return
        nb = self.nb
        Xs = X
        while Xs:
            low = Xs & -Xs
            Xs ^= low
            if P & ~nb[low.bit_length() - 1] == 0:
                return
        if not self._colour_bound(P, need):
            return
        best_u, best_c = -1, -1
        U = P | X
        while U:
            low = U & -U
            U ^= low
            u = low.bit_length() - 1
            c = (P & nb[u]).bit_count()
            if c > best_c:
                best_u, best_c = u, c
        branch = P & ~nb[best_u]
        while branch:
            low = branch & -branch
            branch ^= low
            v = low.bit_length() - 1
            R.append(v)
            self._expand(size + 1, P & nb[v], X & nb[v], R, out)
            R.pop()
            P &= ~low
            X |= low
            if P.bit_count() < need:
                return

    def top_tasks(self):
        """Split the root into independent subproblems ``(v, P, X)``; v = -1 is a leaf root."""
        P = (1 << len(self.H)) - 1
        X = 0
        if self.t == 0:
            return [(-1, 0, 0)]
        nb = self.nb
        best_u = max(range(len(self.H)), key=lambda u: ((P & nb[u]).bit_count(), -u))
        tasks = []
        branch = P & ~nb[best_u]
        while branch:
            low = branch & -branch
            branch ^= low
            v = low.bit_length() - 1
            tasks.append((v, P & nb[v], X & nb[v]))
            P &= ~low
            X |= low
        return tasks

    def run_task(self, task) -> list[tuple[int, ...]]:
        v, P, X = task
        out: list = []
        self.stats.tasks += 1
        if v < 0:
            self._expand(0, P, X, [], out)
        else:
            self._expand(1, P, X, [v], out)
        return [tuple(sorted([0, self.G.field.one.index] + [self.H[i] for i in c])) for c in out]

    def run(self, budget: float | None = None, jobs: int = 1) -> list[tuple[int, ...]]:
        tasks = self.top_tasks()
        start = time.monotonic()
        deadline = None if budget is None else start + budget
        results: list = []
        if jobs <= 1:
            self._deadline = deadline
            try:
                for task in tasks:
                    results.extend(self.run_task(task))
            finally:
                self._deadline = None
        else:
            E = self.G.field
            with ProcessPoolExecutor(max_workers=jobs, initializer=_worker_init,
                                     initargs=(E.q, E.d, deadline)) as pool:
                for part in pool.map(_worker_run, tasks, chunksize=1):
                    results.extend(part)
        return sorted(set(results))


_WORKER: CliqueSearch | None = None


def _worker_init(q, d, deadline):
    global _WORKER
    _WORKER = CliqueSearch(paley_graph(q, d))
    _WORKER._deadline = deadline


def _worker_run(task):
    return _WORKER.run_task(task)


def enumerate_target_cliques(G: PaleyGraph, budget: float | None = None, jobs: int = 1) -> list[tuple[int, ...]]:
    """Every maximal clique of size (q + q mod 4)/2 through 0 and 1, as sorted index tuples.

    Each result is re-certified as a maximal clique of the whole graph.
    """
    found = CliqueSearch(G).run(budget=budget, jobs=jobs)
    E = G.field
    for c in found:
        vs = G.is_maximal([E.from_index(i) for i in c], Kind.CLIQUE)
        if not vs.maximal:  # pragma: no cover - would contradict the bridge argument
            raise AssertionError(f"search returned a non-maximal clique {c}")
    return found


@dataclass
class Orbit:
    representative: tuple[int, ...]
    tags: list[str]
    cliques_through_arc: int


@dataclass
class CensusResult:
    q: int
    d: int
    target_size: int
    clique_count: int
    orbits: list[Orbit] = field(default_factory=list)

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    @property
    def representatives(self) -> list[tuple[int, ...]]:
        return [o.representative for o in self.orbits]

    @property
    def matched_constructions(self) -> dict[int, list[str]]:
        return {k: o.tags for k, o in enumerate(self.orbits)}


FAMILY_C1 = "C1/C2-image"
FAMILY_C3 = "C3/C4-image"
UNKNOWN = "Unknown"


def construction_forms(G: PaleyGraph) -> dict[str, set[tuple[int, ...]]]:
    """Canonical forms of every construction, turned into a clique where needed.

    Independent sets are multiplied by alpha, which makes them cliques when
    q = 1 mod 4.
    """
    E = G.field
    forms: dict[str, set] = {FAMILY_C1: set(), FAMILY_C3: set()}
    for ident, res in all_constructions(G).items():
        S = res.elements
        if res.set.kind is Kind.INDEPENDENT:
            S = frozenset(E.alpha * g for g in S)
        if G.kind_of(S) is not Kind.CLIQUE:
            continue
        fam = FAMILY_C1 if ident in ("C1", "C2") else FAMILY_C3
        forms[fam].add(canonical_form(G, S))
    return forms


def classify(G: PaleyGraph, budget: float | None = None, jobs: int = 1, cliques=None) -> CensusResult:
    E = G.field
    start = time.monotonic()
    if cliques is None:
        cliques = enumerate_target_cliques(G, budget=budget, jobs=jobs)
    groups: dict[tuple, int] = {}
    for c in cliques:
        if budget is not None and time.monotonic() - start > budget:
            raise BudgetExhausted("census budget exhausted while classifying")
        key = canonical_form(G, [E.from_index(i) for i in c])
        groups[key] = groups.get(key, 0) + 1
    forms = construction_forms(G)
    orbits = []
    for key in sorted(groups):
        tags = [fam for fam in (FAMILY_C1, FAMILY_C3) if key in forms[fam]] or [UNKNOWN]
        orbits.append(Orbit(key, tags, groups[key]))
    return CensusResult(E.q, E.d, target_size(E.q), len(cliques), orbits)


# -- cache ------------------------------------------------------------------

def cache_path(cache_dir, q: int, d: int) -> Path:
    return Path(cache_dir) / f"census-q{q}-d{d}.v{CACHE_VERSION}"


def default_cache_dir() -> Path:
    return Path(os.environ.get("CACHE_DIR", Path.home() / ".cache" / "paleyclique"))


def result_to_dict(res: CensusResult, E: ExtField) -> dict:
    def pairs(key):
        return [[E.from_index(i).x, E.from_index(i).y] for i in key]

    return {
        "format": "paleyclique-census",
        "version": CACHE_VERSION,
        "q": res.q,
        "p": E.p,
        "e": E.e,
        "d": res.d,
        "target_size": res.target_size,
        "clique_count": res.clique_count,
        "orbit_count": res.orbit_count,
        "orbits": [
            {
                "representative": pairs(o.representative),
                "tags": o.tags,
                "cliques_through_arc": o.cliques_through_arc,
            }
            for o in res.orbits
        ],
    }


def result_from_dict(doc: dict) -> CensusResult:
    if doc.get("format") != "paleyclique-census" or doc.get("version") != CACHE_VERSION:
        raise ValueError("unrecognised census cache document")
    q = doc["q"]
    orbits = [
        Orbit(tuple(x + q * y for x, y in o["representative"]), list(o["tags"]), o["cliques_through_arc"])
        for o in doc["orbits"]
    ]
    res = CensusResult(q, doc["d"], doc["target_size"], doc["clique_count"], orbits)
    if res.orbit_count != doc["orbit_count"]:
        raise ValueError("census cache is inconsistent")
    return res


def dumps(res: CensusResult, E: ExtField) -> str:
    return json.dumps(result_to_dict(res, E), sort_keys=True, indent=1) + "\n"


def write_cache(path: Path, res: CensusResult, E: ExtField):
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(dumps(res, E))
    tmp.replace(path)


def read_cache(path: Path) -> CensusResult | None:
    if not path.exists():
        return None
    return result_from_dict(json.loads(path.read_text()))
