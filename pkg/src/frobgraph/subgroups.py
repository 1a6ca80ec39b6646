"""Subgroup classes up to conjugacy, and whole-group classification scans.

Enumeration strategy: seed with the trivial subgroup (and, for nonsolvable
groups, all perfect subgroups found by two-generator closure), then extend
every known class representative H by elements z of its normalizer with
z^p in H for a prime p.  Every subgroup sits above its perfect core through
a chain of such prime extensions, so the sweep is complete.  Conjugacy
dedup keeps the full orbit of every discovered class in one hash set, so a
repeat candidate costs one lookup.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DeskScaleExceeded
from .frobenius import Verdict, is_diameter_three, is_rich
from .depth import minimal_depth
from .group import (
    Subgroup,
    centralizer_of_element,
    closure_indices,
    conjugate_indices,
    conjugacy_classes,
    is_perfect_subset,
    is_solvable,
    normalizer,
    _greedy_generators,
)


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups: canonical representative and length."""

    rep: Subgroup
    length: int

    @property
    def order(self):
        return self.rep.order


@dataclass
class SubgroupClassList:
    group: object
    classes: list

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    def of_order(self, k):
        return [c for c in self.classes if c.order == k]


def _orbit_of_subgroup(G, indices):
    """All G-conjugates of an index set, as a set of frozensets."""
    start = frozenset(indices)
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for g in G.generator_indices:
                t = conjugate_indices(G, s, g)
                if t not in orbit:
                    orbit.add(t)
                    nxt.append(t)
        frontier = nxt
    return orbit


class _Enumerator:
    def __init__(self, G):
        self.G = G
        self.seen = {}
        self.classes = []
        self.work = []

    def register(self, members, gen_indices):
        fz = frozenset(members)
        if fz in self.seen:
            return None
        orbit = _orbit_of_subgroup(self.G, fz)
        rep_set = min(orbit, key=lambda s: tuple(sorted(s)))
        cls_id = len(self.classes)
        for s in orbit:
            self.seen[s] = cls_id
        if rep_set == fz and gen_indices is not None:
            rep = Subgroup(self.G, rep_set, gen_indices)
        else:
            rep = Subgroup(self.G, rep_set)
        record = SubgroupClass(rep=rep, length=len(orbit))
        self.classes.append(record)
        self.work.append(record)
        return record

    def run(self):
        G = self.G
        self.register(frozenset((0,)), ())
        self.register(frozenset(range(G.order)), G.generator_indices)
        if not is_solvable(G):
            self._seed_perfect()
        while self.work:
            rec = self.work.pop()
            if not rec.rep.is_whole():
                self._extend(rec.rep)
        self.classes.sort(key=lambda c: (c.order, c.rep.sorted_indices()))
        return SubgroupClassList(group=G, classes=self.classes)

    def _extend(self, H):
        """All prime-index cyclic extensions of H inside its normalizer."""
        G = self.G
        N = normalizer(G, H)
        hset = H.indices
        for z in sorted(N.indices):
            if z in hset:
                continue
            # least m with z^m in H; extension is useful only for prime m
            m = 1
            zp = z
            while zp not in hset:
                zp = G.mult(zp, z)
                m += 1
            if m == 1 or not _is_small_prime(m):
                continue
            members = set(hset)
            zt = z
            for _ in range(m - 1):
                members.update(G.mult(h, zt) for h in hset)
                zt = G.mult(zt, z)
            self.register(members, tuple(H.generator_indices) + (z,))

    def _seed_perfect(self):
        """Perfect subgroups by two-generator closure over class-rep pairs.

        Complete as long as every perfect subgroup is 2-generated, which
        holds well beyond the desk cap; the guard below refuses the first
        order where a product of two simple factors could fit.
        """
        G = self.G
        if G.order % 3600 == 0:
            raise DeskScaleExceeded(
                "perfect-subgroup seeding is only guaranteed below order 3600"
            )
        cd = conjugacy_classes(G)
        half = G.order // 2
        for i in range(1, len(cd)):
            x = cd.rep_indices[i]
            cyclic_x = closure_indices(G, (x,))
            cent = centralizer_of_element(G, x)
            cent_gens = _greedy_generators(G, frozenset(cent))
            orbit_rep = [-1] * G.order
            for y in range(G.order):
                if orbit_rep[y] >= 0 or y in cyclic_x:
                    continue
                # orbit of y under conjugation by the centralizer of x
                orbit = [y]
                orbit_rep[y] = y
                frontier = [y]
                while frontier:
                    nxt = []
                    for t in frontier:
                        for c in cent_gens:
                            u = G.conj(c, t)
                            if orbit_rep[u] < 0:
                                orbit_rep[u] = y
                                orbit.append(u)
                                nxt.append(u)
                    frontier = nxt
                members = self._closure_capped((x, y), half)
                if members is None:
                    continue
                n = len(members)
                if n < 60 or n % 12 or n == G.order:
                    continue
                if frozenset(members) in self.seen:
                    continue
                if is_perfect_subset(G, members, (x, y)):
                    self.register(members, (x, y))

    def _closure_capped(self, gens, cap):
        """Closure of gens, or None once it must be the whole group."""
        G = self.G
        members = {0}
        members.update(gens)
        frontier = [g for g in gens if g]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    for c in (G.mult(a, g), G.mult(g, a)):
                        if c not in members:
                            members.add(c)
                            nxt.append(c)
                            if len(members) > cap:
                                return None
            frontier = nxt
        return frozenset(members)


def _is_small_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def enumerate_subgroup_classes(G):
    """Complete list of subgroup classes up to conjugacy (cached on the group)."""
    if G._subgroup_classes is None:
        G._subgroup_classes = _Enumerator(G).run()
    return G._subgroup_classes


def prime_order_subgroup_classes(G):
    """Classes of prime-order subgroups, without the full enumeration."""
    seen = set()
    classes = []
    for x in range(1, G.order):
        if not _is_small_prime(G.element_order(x)):
            continue
        members = closure_indices(G, (x,))
        if members in seen:
            continue
        orbit = _orbit_of_subgroup(G, members)
        seen.update(orbit)
        rep_set = min(orbit, key=lambda s: tuple(sorted(s)))
        classes.append(SubgroupClass(rep=Subgroup(G, rep_set), length=len(orbit)))
    classes.sort(key=lambda c: (c.order, c.rep.sorted_indices()))
    return classes


def has_diameter_three_subgroup(G):
    """Scan prime-order classes for a rich one; richness at prime order is
    enough because a non-normal prime-order subgroup meets some conjugate
    trivially.  Returns a Verdict whose witness is the rich class.
    """
    for cls in prime_order_subgroup_classes(G):
        if cls.rep.order == G.order:
            continue
        if is_rich(G, cls.rep):
            return Verdict(True, witness=cls)
    return Verdict(False)


@dataclass
class ClassRow:
    """Per-class verdicts of a classification scan."""

    order: int
    length: int
    subgroup: Subgroup
    is_rich: bool | None = None
    rich_witness: object = None
    is_diam3: bool | None = None
    diam3_witness: object = None
    depth: int | None = None


@dataclass
class ClassificationReport:
    """Scan results: per-class rows plus the aggregate counts.

    n counts all classes, g the nontrivial rich classes, m the rich classes
    maximal with respect to inclusion among rich classes.
    """

    group: object
    rows: list
    n: int
    g: int
    m: int
    maximal_rich_rows: list = field(default_factory=list)

    @property
    def rich_orders(self):
        return sorted(r.order for r in self.rows if r.is_rich and r.order > 1)

    @property
    def maximal_rich_orders(self):
        return sorted(r.order for r in self.maximal_rich_rows)

    def to_json_dict(self):
        return {
            "order": self.group.order,
            "n": self.n,
            "g": self.g,
            "m": self.m,
            "maximal_rich_orders": self.maximal_rich_orders,
            "classes": [
                {
                    "order": r.order,
                    "length": r.length,
                    "rich": r.is_rich,
                    "diameter_three": r.is_diam3,
                    "depth": r.depth,
                }
                for r in self.rows
            ],
        }


def _contained_up_to_conjugacy(G, small, big):
    """Whether some conjugate of `small` lies inside the set `big`."""
    if small.order == 1:
        return True
    if big.order % small.order:
        return False
    for g in range(G.order):
        if all(G.conj(g, x) in big.indices for x in small.generator_indices):
            return True
    return False


def classify_subgroups(G):
    """Rich / diameter-3 / depth verdicts for every subgroup class."""
    classes = enumerate_subgroup_classes(G)
    rows = []
    for cls in classes:
        row = ClassRow(order=cls.order, length=cls.length, subgroup=cls.rep)
        if not cls.rep.is_whole():
            rich = is_rich(G, cls.rep)
            row.is_rich = rich.ok
            row.rich_witness = rich.witness
            d3 = is_diameter_three(G, cls.rep)
            row.is_diam3 = d3.ok
            row.diam3_witness = d3.witness
            row.depth = minimal_depth(G, cls.rep).minimal_depth
        rows.append(row)
    rich_rows = [r for r in rows if r.is_rich and r.order > 1]
    maximal = []
    for r in rich_rows:
        bigger = (
            s for s in rich_rows if s is not r and s.order > r.order
        )
        if not any(
            _contained_up_to_conjugacy(G, r.subgroup, s.subgroup) for s in bigger
        ):
            maximal.append(r)
    return ClassificationReport(
        group=G,
        rows=rows,
        n=len(rows),
        g=len(rich_rows),
        m=len(maximal),
        maximal_rich_rows=maximal,
    )


def maximal_subgroup_classes(G):
    """Classes whose representatives are maximal proper subgroups."""
    classes = [c for c in enumerate_subgroup_classes(G) if not c.rep.is_whole()]
    out = []
    for c in classes:
        others = (
            d for d in classes
            if d is not c and c.order < d.order < G.order
        )
        if not any(_contained_up_to_conjugacy(G, c.rep, d.rep) for d in others):
            out.append(c)
    return out


def is_minimal_rich_group(G):
    """G has a nontrivial rich subgroup but no proper subgroup does.

    Richness passes down into overgroups, so checking the maximal subgroup
    classes suffices.
    """
    if not has_diameter_three_subgroup(G):
        return False
    for cls in maximal_subgroup_classes(G):
        if cls.order == 1:
            continue
        M = cls.rep.as_group()
        if has_diameter_three_subgroup(M):
            return False
    return True
