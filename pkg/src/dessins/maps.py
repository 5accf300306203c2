r"""Brute-force enumeration of ribbon graphs as permutation data.

A combinatorial map on darts 0..N-1 is a pair (s0, s1): s0 is the vertex
rotation (cycle type = the vertex valences), s1 the fixed-point-free edge
involution.  Faces are the orbits of (s0 s1)^-1.  A *direction* is a dart
sign map with eps(s0 d) = -eps(d) and eps(s1 d) = -eps(d); it exists iff the
dual is bipartite, is constant on faces, and on a connected map is unique up
to the global flip.

Counting convention: automorphism-weighted counts sum 1/#Aut over
isomorphism classes.  They are computed without ever listing automorphisms,
via orbit counting: fix s0 as the canonical representative of its cycle
type, enumerate the remaining data freely, and divide by the centralizer
order of s0.  Automorphisms fix each labeled positive boundary and may
permute unlabeled negative boundaries, which is exactly what enumerating
positive-face labelings realizes.

This module is the ground truth the operator routes are tested against; it
must stay independent of them, so it shares no code with the Fock-space
side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

Perm = Tuple[int, ...]

DEFAULT_DART_BUDGET = 16


class BudgetExceeded(Exception):
    """Raised when an enumeration would exceed the configured dart budget."""


def canonical_s0(valences: Sequence[int]) -> Perm:
    """Representative of the cycle type: consecutive cycles 0..v1-1, ..."""
    n = sum(valences)
    s0 = list(range(n))
    start = 0
    for v in valences:
        for i in range(v):
            s0[start + i] = start + (i + 1) % v
        start += v
    return tuple(s0)


def centralizer_order(valences: Sequence[int]) -> int:
    """|Z(s0)| in S_N for cycle type ``valences``."""
    out = 1
    for v in set(valences):
        m = list(valences).count(v)
        out *= v**m * factorial(m)
    return out


def fpf_involutions(n: int, first_partner: int | None = None) -> Iterator[Perm]:
    """All fixed-point-free involutions of range(n); n must be even.

    With ``first_partner`` set, only the involutions pairing dart 0 with it
    are produced; the ranges over first partners split the search space into
    independent slices for parallel scans.
    """
    if n % 2:
        return
    pairing = [-1] * n

    def rec(a: int) -> Iterator[Perm]:
        while a < n and pairing[a] >= 0:
            a += 1
        if a == n:
            yield tuple(pairing)
            return
        for b in range(a + 1, n):
            if pairing[b] < 0:
                pairing[a], pairing[b] = b, a
                yield from rec(a + 1)
                pairing[b] = -1
        pairing[a] = -1

    if first_partner is not None:
        if not 1 <= first_partner < n:
            return
        pairing[0], pairing[first_partner] = first_partner, 0
        yield from rec(1)
        return
    yield from rec(0)


def orbits(perm: Perm) -> List[Tuple[int, ...]]:
    n = len(perm)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return out


def components(s0: Perm, s1: Perm) -> List[int]:
    """Union-find component index per dart under <s0, s1>."""
    n = len(s0)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d in range(n):
        for e in (s0[d], s1[d]):
            pa, pb = find(d), find(e)
            if pa != pb:
                parent[pa] = pb
    return [find(d) for d in range(n)]


def direction_coloring(s0: Perm, s1: Perm, comp: Sequence[int]) -> Optional[List[int]]:
    """A sign map with eps(s0 d) = eps(s1 d) = -eps(d), or None.

    The returned coloring gives each component's least dart the sign +1;
    every other consistent coloring flips whole components.
    """
    n = len(s0)
    eps = [0] * n
    for start in range(n):
        if eps[start]:
            continue
        eps[start] = 1
        stack = [start]
        while stack:
            d = stack.pop()
            for e in (s0[d], s1[d]):
                want = -eps[d]
                if eps[e] == 0:
                    eps[e] = want
                    stack.append(e)
                elif eps[e] != want:
                    return None
    return eps


def face_orbits(s0: Perm, s1: Perm) -> List[Tuple[int, ...]]:
    """Orbits of the face permutation (the inverse of d -> s0(s1(d)))."""
    n = len(s0)
    p = tuple(s0[s1[d]] for d in range(n))
    return orbits(p)


@dataclass(frozen=True)
class DirectedMap:
    """A connected-or-not directed map with its face data."""

    s0: Perm
    s1: Perm
    eps: Tuple[int, ...]
    faces: Tuple[Tuple[int, ...], ...]
    face_sign: Tuple[int, ...]
    n_components: int
    total_genus: int

    @property
    def pos_perims(self) -> Tuple[int, ...]:
        return tuple(sorted(len(f) for f, s in zip(self.faces, self.face_sign) if s > 0))

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.face_sign if s < 0)

    def edges(self) -> List[Tuple[int, int]]:
        """(positive face index, negative face index) per edge."""
        face_of = {}
        for i, f in enumerate(self.faces):
            for d in f:
                face_of[d] = i
        out = []
        for d in range(len(self.s0)):
            e = self.s1[d]
            if d < e:
                fd, fe = face_of[d], face_of[e]
                if self.eps[d] > 0:
                    out.append((fd, fe))
                else:
                    out.append((fe, fd))
        return out


def directed_maps(
    valences: Sequence[int], connected_only: bool = True, budget: int = DEFAULT_DART_BUDGET
) -> Iterator[DirectedMap]:
    """All directed maps with the given vertex valences, s0 canonical.

    Each consistent underlying map is emitted once per direction (global
    sign flips included), so weighted counts are sums over the results
    divided by the centralizer order of s0.
    """
    n = sum(valences)
    if n > budget:
        raise BudgetExceeded(f"{n} darts exceed budget {budget}")
    if n == 0:
        return
    s0 = canonical_s0(valences)
    v_count = len(valences)
    for s1 in fpf_involutions(n):
        comp = components(s0, s1)
        comp_ids = sorted(set(comp))
        n_comp = len(comp_ids)
        if connected_only and n_comp > 1:
            continue
        base = direction_coloring(s0, s1, comp)
        if base is None:
            continue
        faces = face_orbits(s0, s1)
        # vertices per component for the genus computation
        vstart = []
        start = 0
        for v in valences:
            vstart.append(start)
            start += v
        for flips in range(1 << n_comp):
            eps = list(base)
            for ci, cid in enumerate(comp_ids):
                if flips >> ci & 1:
                    for d in range(n):
                        if comp[d] == cid:
                            eps[d] = -eps[d]
            sign = []
            ok = True
            for f in faces:
                s = eps[f[0]]
                if any(eps[d] != s for d in f):
                    ok = False
                    break
                sign.append(s)
            if not ok:
                raise AssertionError("direction not constant on a face")
            total_genus = 0
            for cid in comp_ids:
                vv = sum(1 for s in vstart if comp[s] == cid)
                ee = sum(1 for d in range(n) if comp[d] == cid) // 2
                ff = sum(1 for f in faces if comp[f[0]] == cid)
                chi = vv - ee + ff
                assert (2 - chi) % 2 == 0
                total_genus += (2 - chi) // 2
            yield DirectedMap(
                s0, s1, tuple(eps), tuple(faces), tuple(sign), n_comp, total_genus
            )


@dataclass(frozen=True)
class EnumSpec:
    """A request for a weighted count of directed quadri/bivalent maps."""

    v4: int
    v2: int
    n_plus: int
    n_minus: int
    alpha: Tuple[int, ...]
    g: Optional[int] = None
    connected_only: bool = True

    @property
    def n_darts(self) -> int:
        return 4 * self.v4 + 2 * self.v2


# worker count for the parallel s1-range scan; set via configure_threads()
_SCAN_THREADS = 1


def configure_threads(threads: int) -> None:
    global _SCAN_THREADS
    _SCAN_THREADS = max(1, int(threads))


def _scan_connected(
    valences: Tuple[int, ...], first_partner: int | None
) -> Dict[Tuple[int, int, Tuple[int, ...]], int]:
    """Aggregate one s1-range slice of the connected-map table.

    A single BFS both 2-colors the darts and checks connectivity; the two
    global directions of one map contribute the key and its sign-swapped
    mirror.
    """
    table: Dict[Tuple[int, int, Tuple[int, ...]], int] = {}
    n = sum(valences)
    s0 = canonical_s0(valences)
    n_vert = len(valences)
    eps = [0] * n
    stack = [0] * n
    for s1 in fpf_involutions(n, first_partner):
        for d in range(n):
            eps[d] = 0
        eps[0] = 1
        stack[0] = 0
        top = 1
        seen = 1
        ok = True
        while top and ok:
            top -= 1
            d = stack[top]
            ed = eps[d]
            for e in (s0[d], s1[d]):
                w = eps[e]
                if w == 0:
                    eps[e] = -ed
                    stack[top] = e
                    top += 1
                    seen += 1
                elif w == ed:
                    ok = False
                    break
        if not ok or seen != n:
            continue
        pos_perims = []
        neg_perims = []
        unseen = [True] * n
        n_faces = 0
        for start in range(n):
            if not unseen[start]:
                continue
            ln = 0
            d = start
            while unseen[d]:
                unseen[d] = False
                ln += 1
                d = s0[s1[d]]
            n_faces += 1
            (pos_perims if eps[start] > 0 else neg_perims).append(ln)
        chi = n_vert - n // 2 + n_faces
        g = (2 - chi) // 2
        k1 = (g, len(neg_perims), tuple(sorted(pos_perims)))
        k2 = (g, len(pos_perims), tuple(sorted(neg_perims)))
        table[k1] = table.get(k1, 0) + 1
        table[k2] = table.get(k2, 0) + 1
    return table


@lru_cache(maxsize=None)
def _dessin_table(
    v4: int, v2: int, connected_only: bool, budget: int
) -> Dict[Tuple[int, int, Tuple[int, ...]], int]:
    """Structure counts keyed by (total genus, n_minus, sorted positive perims).

    Independent of the worker count: the parallel path sums the same slice
    tables the sequential path scans in order.
    """
    valences = (4,) * v4 + (2,) * v2
    n = sum(valences)
    if n == 0:
        return {}
    if n > budget:
        raise BudgetExceeded(f"{n} darts exceed budget {budget}")
    if not connected_only:
        table: Dict[Tuple[int, int, Tuple[int, ...]], int] = {}
        for dm in directed_maps(valences, connected_only=False, budget=budget):
            key = (dm.total_genus, dm.n_minus, dm.pos_perims)
            table[key] = table.get(key, 0) + 1
        return table
    if _SCAN_THREADS > 1 and n >= 10:
        import multiprocessing

        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(_SCAN_THREADS) as pool:
            slices = pool.starmap(
                _scan_connected, [(valences, b) for b in range(1, n)]
            )
        table = {}
        for part in slices:
            for k, v in part.items():
                table[k] = table.get(k, 0) + v
        return table
    return _scan_connected(valences, None)


def count_dessins(spec: EnumSpec, budget: int = DEFAULT_DART_BUDGET) -> Fraction:
    """Sum of 1/#Aut over iso classes matching ``spec``.

    Positive boundaries are labeled with perimeters ``alpha``; negative
    boundaries are unlabeled; automorphisms fix each positive boundary.
    """
    if spec.v4 < 0 or spec.v2 < 0 or min(spec.alpha, default=1) <= 0:
        return Fraction(0)
    if sum(spec.alpha) != 2 * spec.v4 + spec.v2 or len(spec.alpha) != spec.n_plus:
        return Fraction(0)
    if spec.n_darts > budget:
        raise BudgetExceeded(f"{spec.n_darts} darts exceed budget {budget}")
    table = _dessin_table(spec.v4, spec.v2, spec.connected_only, budget)
    perims = tuple(sorted(spec.alpha))
    relabelings = 1
    for v in set(spec.alpha):
        relabelings *= factorial(spec.alpha.count(v))
    total = 0
    for (g, n_minus, pp), cnt in table.items():
        if n_minus != spec.n_minus or pp != perims:
            continue
        if spec.g is not None and g != spec.g:
            continue
        total += cnt
    return Fraction(total * relabelings, centralizer_order((4,) * spec.v4 + (2,) * spec.v2))


def lattice_points(
    incidence: Sequence[Dict[int, int]],
    targets: Sequence[int],
    min_value: int = 0,
) -> int:
    """Number of integer edge labelings x_e >= min_value with the prescribed
    per-face sums.

    ``incidence[e]`` maps face index -> multiplicity of edge e in that face.
    Solved by depth-first search with residual-sum pruning.
    """
    residual = list(targets)
    if min_value:
        for e, inc in enumerate(incidence):
            for f, m in inc.items():
                residual[f] -= m * min_value
        if any(r < 0 for r in residual):
            return 0

    def rec(e: int) -> int:
        if e == len(incidence):
            return 1 if all(r == 0 for r in residual) else 0
        inc = incidence[e]
        ub = min(residual[f] // m for f, m in inc.items())
        if ub < 0:
            return 0
        total = 0
        for x in range(ub + 1):
            if x:
                for f, m in inc.items():
                    residual[f] -= m
            if all(r >= 0 for r in residual):
                total += rec(e + 1)
        for f, m in inc.items():
            residual[f] += m * ub
        return total

    return rec(0)


def lattice_points_directed(dm: DirectedMap, beta_plus: Sequence[int], beta_minus: Sequence[int]) -> int:
    """P-bar of a directed map: labelings in N^edges with per-face sums beta.

    ``beta_plus`` / ``beta_minus`` are indexed by the positive/negative faces
    of ``dm`` in their face-list order.
    """
    pos_idx = [i for i, s in enumerate(dm.face_sign) if s > 0]
    neg_idx = [i for i, s in enumerate(dm.face_sign) if s < 0]
    if len(beta_plus) != len(pos_idx) or len(beta_minus) != len(neg_idx):
        raise ValueError("beta vectors must match the signed face counts")
    remap = {}
    targets = []
    for i, b in zip(pos_idx + neg_idx, list(beta_plus) + list(beta_minus)):
        remap[i] = len(targets)
        targets.append(b)
    if sum(beta_plus) != sum(beta_minus):
        return 0
    incidence = []
    for fp, fn in dm.edges():
        inc: Dict[int, int] = {}
        inc[remap[fp]] = inc.get(remap[fp], 0) + 1
        inc[remap[fn]] = inc.get(remap[fn], 0) + 1
        incidence.append(inc)
    return lattice_points(incidence, targets, min_value=0)


# ---------------------------------------------------------------------------
# Norbury lattice counts for ordinary ribbon graphs
# ---------------------------------------------------------------------------

NORBURY_SUPPORTED = {(0, 3), (1, 1)}


def _valence_types(g: int, n: int) -> List[Tuple[int, ...]]:
    """Vertex-valence multisets (parts >= 3) of cells of M_{g,n}^comb."""
    out = []
    e_max = 3 * (2 * g - 2 + n)
    for e in range(1, e_max + 1):
        v = e - (2 * g - 2 + n)
        if v < 1:
            continue

        def partitions(total, parts, mx):
            if parts == 0:
                if total == 0:
                    yield ()
                return
            for p in range(min(total - 3 * (parts - 1), mx), 2, -1):
                for rest in partitions(total - p, parts - 1, p):
                    yield (p,) + rest

        out.extend(sorted(t) for t in partitions(2 * e, v, 2 * e))
    return [tuple(t) for t in out]


@dataclass(frozen=True)
class NorburyCell:
    """A ribbon-graph cell with labeled faces, carrying its orbit weight."""

    incidence: Tuple[Tuple[Tuple[int, int], ...], ...]  # per edge: (face, mult)
    weight: Fraction  # 1 / |Z(s0)| per labeled structure


@lru_cache(maxsize=None)
def _norbury_cells(g: int, n: int) -> Tuple[NorburyCell, ...]:
    if (g, n) not in NORBURY_SUPPORTED:
        raise ValueError(f"unsupported (g, n) = {(g, n)}; supported: {sorted(NORBURY_SUPPORTED)}")
    cells: List[NorburyCell] = []
    for valences in _valence_types(g, n):
        s0 = canonical_s0(valences)
        nd = len(s0)
        w = Fraction(1, centralizer_order(valences))
        for s1 in fpf_involutions(nd):
            comp = components(s0, s1)
            if len(set(comp)) > 1:
                continue
            faces = face_orbits(s0, s1)
            if len(faces) != n:
                continue
            v = len(valences)
            e = nd // 2
            genus = (2 - (v - e + n)) // 2
            if genus != g:
                continue
            face_of = {}
            for i, f in enumerate(faces):
                for d in f:
                    face_of[d] = i
            # one cell per labeling of the n faces
            for perm in itertools.permutations(range(n)):
                incidence = []
                for d in range(nd):
                    e2 = s1[d]
                    if d < e2:
                        inc: Dict[int, int] = {}
                        for dd in (d, e2):
                            f = perm[face_of[dd]]
                            inc[f] = inc.get(f, 0) + 1
                        incidence.append(tuple(sorted(inc.items())))
                cells.append(NorburyCell(tuple(incidence), w))
    return tuple(cells)


def norbury_N(g: int, n: int, alpha: Sequence[int]) -> Fraction:
    """Weighted number of integer metric ribbon graphs of type (g, n) with
    labeled boundary perimeters ``alpha`` (edge lengths are positive
    integers; weight 1/#Aut)."""
    if (g, n) not in NORBURY_SUPPORTED:
        raise ValueError(f"unsupported (g, n) = {(g, n)}; supported: {sorted(NORBURY_SUPPORTED)}")
    if len(alpha) != n or any(a < 1 for a in alpha):
        raise ValueError("alpha must list one positive perimeter per boundary")
    total = Fraction(0)
    for cell in _norbury_cells(g, n):
        incidence = [dict(inc) for inc in cell.incidence]
        cnt = lattice_points(incidence, list(alpha), min_value=1)
        if cnt:
            total += cell.weight * cnt
    return total


# ---------------------------------------------------------------------------
# text dump (external regression format)
# ---------------------------------------------------------------------------


def _cycles_str(perm: Perm) -> str:
    return "".join(
        "(" + " ".join(str(d) for d in cyc) + ")" for cyc in orbits(perm) if len(cyc) > 1
    ) or "()"


def map_dump_lines(
    valences: Sequence[int], connected_only: bool = True, budget: int = DEFAULT_DART_BUDGET
) -> Iterator[str]:
    """Line-oriented dump: dart count, s0 cycles, s1 pairs, signed faces."""
    for dm in directed_maps(valences, connected_only=connected_only, budget=budget):
        faces = " ".join(
            ("+" if s > 0 else "-") + "(" + " ".join(str(d) for d in f) + ")"
            for f, s in zip(dm.faces, dm.face_sign)
        )
        yield (
            f"darts={len(dm.s0)} s0={_cycles_str(dm.s0)} s1={_cycles_str(dm.s1)} "
            f"genus={dm.total_genus} faces={faces}"
        )
