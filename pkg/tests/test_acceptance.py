"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All arithmetic is exact, so every assertion is exact equality; the stated
wall-clock budgets are asserted as well.  Run with -s to see the lines.
"""

import math
import time
from contextlib import contextmanager

from helpers import group, matrices_permutation_equal, subgroup_of_order

from frobgraph.catalog import SCAN_SPECS, affine_diam3_criterion, construct, GroupSpec
from frobgraph.chartab import character_table, table_stats
from frobgraph.depth import minimal_depth
from frobgraph.frobenius import (
    double_coset_reps,
    frobenius_matrix,
    induced_gram,
    is_diameter_three,
    is_rich,
    mackey_inner_product,
    permutation_character,
    satisfies_bii,
)
from frobgraph.graph import INFINITE, frobenius_graph, irr_action_orbits
from frobgraph.group import (
    conjugacy_classes,
    core,
    coset_action,
    derived_subgroup,
    derived_subgroup_of,
)
from frobgraph.perm import Permutation
from frobgraph.subgroups import (
    classify_subgroups,
    enumerate_subgroup_classes,
    has_diameter_three_subgroup,
    is_minimal_rich_group,
)


@contextmanager
def criterion(number, budget_seconds, description):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"criterion {number}: FAIL - {description}")
        raise
    elapsed = time.monotonic() - start
    print(f"criterion {number}: PASS ({elapsed:.1f}s / budget {budget_seconds}s) - {description}")
    assert elapsed < budget_seconds, f"criterion {number} exceeded its time budget"


G80_MATRIX = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 2, 2, 0],
    [0, 0, 0, 0, 0, 2, 0, 2],
    [0, 0, 0, 0, 0, 0, 2, 2],
]


def test_criterion_1_g80_matrix():
    with criterion(1, 5, "order-80 group: one diameter-3 class of order 4, printed matrix"):
        G = group("Named:G80")
        order4 = [c for c in enumerate_subgroup_classes(G) if c.order == 4]
        assert len(order4) == 7
        hits = [c for c in order4 if is_diameter_three(G, c.rep).ok]
        assert len(hits) == 1
        M = frobenius_matrix(G, hits[0].rep)
        assert matrices_permutation_equal(M.entries, G80_MATRIX)


def point_stabilizer(n_plus_1):
    G = group(f"S{n_plus_1}")
    n = n_plus_1 - 1
    gens = [Permutation.from_cycles(n_plus_1, [(0, 1)])]
    if n >= 3:
        gens.append(Permutation.from_cycles(n_plus_1, [tuple(range(n))]))
    H = G.subgroup(gens)
    assert H.order == math.factorial(n)
    return G, H


def test_criterion_2_symmetric_chain():
    with criterion(2, 60, "Gamma(S_{n+1}, S_n) has diameter 2n for n = 2..5"):
        G, H = point_stabilizer(3)
        g = frobenius_graph(frobenius_matrix(G, H))
        assert g.n_components == 1
        assert g.n_left + g.n_right == 5
        assert g.diameter == 4
        degs = sorted(len(a) for a in g.adjacency)
        assert degs == [1, 1, 2, 2, 2]  # a path on 5 vertices
        for n in (3, 4, 5):
            G, H = point_stabilizer(n + 1)
            assert frobenius_graph(frobenius_matrix(G, H)).diameter == 2 * n


def test_criterion_3_g351():
    with criterion(3, 30, "order-351 group: rich order-9 subgroup failing b(ii)"):
        G = group("Named:G351")
        t = character_table(G)
        assert sorted(t.degrees) == [1] * 13 + [13, 13]
        H = subgroup_of_order(G, 9)
        assert permutation_character(G, H) == (1,) * 15
        assert is_rich(G, H).ok
        v = satisfies_bii(G, H)
        assert not v.ok
        M = frobenius_matrix(G, H)
        i, j = v.witness
        cols = {c for c, d in enumerate(t.degrees) if d == 13}
        for r in (i, j):
            support = [c for c, x in enumerate(M.row(r)) if x]
            assert len(support) == 1 and support[0] in cols and M.row(r)[support[0]] == 3
        assert {M.row(i).index(3), M.row(j).index(3)} == cols
        assert not is_diameter_three(G, H).ok


def test_criterion_4_table2_rows():
    with criterion(4, 60, "simple-group scan rows for A5 and PSL(3,2)"):
        rep = classify_subgroups(group("A5"))
        assert (rep.n, rep.g, rep.m) == (9, 2, 2)
        assert rep.rich_orders == [2, 3]
        rep = classify_subgroups(group("PSL3:2"))
        assert (rep.n, rep.g, rep.m) == (15, 3, 2)
        assert rep.maximal_rich_orders == [3, 4]


def test_criterion_5_sl2():
    with criterion(5, 300, "SL(2,5) has no diameter-3 subgroup; SL(2,7) has one and is minimal"):
        assert not has_diameter_three_subgroup(group("SL2:5")).ok
        v = has_diameter_three_subgroup(group("SL2:7"))
        assert v.ok and v.witness.order == 3
        assert is_minimal_rich_group(group("SL2:7"))


def test_criterion_6_depth():
    with criterion(6, 1, "depth of S2 < S3 and of the Sylow 2 in the order-12 dihedral"):
        S3 = group("S3")
        H = S3.subgroup([Permutation.from_cycles(3, [(0, 1)])])
        assert minimal_depth(S3, H).minimal_depth == 3
        assert frobenius_graph(frobenius_matrix(S3, H)).diameter == 4
        D12 = group("Named:D12")
        P = subgroup_of_order(D12, 4)
        assert minimal_depth(D12, P).minimal_depth == 3
        g = frobenius_graph(frobenius_matrix(D12, P))
        assert g.n_components == 2 and g.diameter == INFINITE
        comps = {}
        for vtx, c in enumerate(g.component_id):
            comps.setdefault(c, []).append(vtx)
        for vs in comps.values():
            assert sorted(len(g.adjacency[x]) for x in vs) == [1, 1, 2, 2, 2]


def _h_orbit_count_on_cosets(G, H):
    act = coset_action(G, H)
    seen = set()
    orbits = 0
    for c in range(len(act.coset_reps)):
        if c in seen:
            continue
        orbits += 1
        stack = [c]
        seen.add(c)
        while stack:
            cur = stack.pop()
            for h in H.generator_indices:
                nxt = act.coset_of[G.mult(h, act.coset_reps[cur])]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return orbits


def test_criterion_7_equivalence_suite():
    with criterion(7, 600, "equivalence suite over every catalog pair"):
        pairs = 0
        for spec in SCAN_SPECS:
            G = construct(spec)
            assert G.order <= 2000
            for cls in enumerate_subgroup_classes(G):
                H = cls.rep
                if H.is_whole():
                    continue
                M = frobenius_matrix(G, H)  # degree sums verified on build
                S = induced_gram(M)
                g = frobenius_graph(M)
                assert is_diameter_three(G, H).ok == (g.diameter == 3)
                K = core(G, H)
                assert irr_action_orbits(G, K)[0] == g.n_components
                assert (g.n_components == 1) == (K.order == 1)
                kH = M.n_rows
                for i in range(kH):
                    for j in range(i, kH):
                        assert mackey_inner_product(G, H, i, j) == S.entries[i][j]
                assert S.entries[0][0] == len(double_coset_reps(G, H))
                assert S.entries[0][0] == _h_orbit_count_on_cosets(G, H)
                # reciprocity for the trivial row: multiplicities in the
                # permutation character, recomputed from coset fixed points
                act = coset_action(G, H)
                tG = M.table_g
                fixed = []
                for rep in tG.classes.rep_indices:
                    img = act.image_of(rep)
                    fixed.append(sum(1 for a, b in enumerate(img.images) if a == b))
                from frobgraph.cyclo import cyc_sum

                for c in range(tG.k):
                    tot = cyc_sum(
                        fixed[x] * tG.conj_values()[c][x] * tG.classes.sizes[x]
                        for x in range(tG.k)
                    )
                    assert tot.to_rational_integer() == G.order * M.entries[0][c]
                pairs += 1
        assert pairs > 300
        print(f"  equivalence suite covered {pairs} (G, H) pairs")


SUPERSOLVABLE = (
    "C6", "C12", "D8", "Named:D12", "EA:2:3", "EA:3:2",
    "S3", "S3xC4", "S3xS3", "AGL1:5", "AGL1:7",
    "AGL1:9:2", "AGL1:9:4",
)


def test_criterion_8_bounds_and_obstructions():
    with criterion(8, 600, "bound suite on every rich subgroup found in the scans"):
        rich_found = 0
        for spec in SCAN_SPECS:
            G = construct(spec)
            report = classify_subgroups(G)
            st = table_stats(character_table(G))
            kG = st.k
            gprime = derived_subgroup(G)
            for row in report.rows:
                if not row.is_rich or row.order == 1:
                    continue
                rich_found += 1
                H = row.subgroup
                index = G.order // H.order
                assert H.order * H.order < G.order
                assert H.order < st.b
                assert H.order <= index - kG + 1
                assert st.T <= index
                assert H.indices <= gprime.indices
                assert core(G, H).order == 1
                assert not _is_prime_power(index)
                _check_degree_two_kernels(G, H)
                if row.is_diam3:
                    assert row.order <= 16
        for name in SUPERSOLVABLE:
            assert classify_subgroups(group(name)).g == 0, name
        assert rich_found > 30
        print(f"  bound suite checked {rich_found} rich subgroup classes")


def _is_prime_power(n):
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return False


def _check_degree_two_kernels(G, H):
    # a degree-2 character restricting with a trivial constituent splits as
    # two linear characters, so its kernel contains the derived subgroup of H
    t = character_table(G)
    M = frobenius_matrix(G, H)
    hderived = derived_subgroup_of(H)
    cd = t.classes
    for c, d in enumerate(t.degrees):
        if d != 2 or M.entries[0][c] == 0:
            continue
        kernel_classes = {i for i in range(t.k) if t.values[c][i] == 2}
        for x in hderived.indices:
            assert cd.class_of_index[x] in kernel_classes


def test_criterion_9_affine_criterion():
    with criterion(9, 600, "closed-form affine criterion vs full scans, p in {3,5,7}"):
        for p in (3, 5, 7):
            q = p * p
            for d in range(2, q):
                if (q - 1) % d:
                    continue
                G = construct(GroupSpec("AGL1Subgroup", (q, d)))
                assert affine_diam3_criterion(p, d) == has_diameter_three_subgroup(G).ok, (p, d)


def test_criterion_10_table_self_validation():
    with criterion(10, 600, "character-table identities for every catalog group"):
        for spec in SCAN_SPECS:
            G = construct(spec)
            t = character_table(G)  # construction re-verifies orthogonality
            st = table_stats(t)
            assert sum(d * d for d in t.degrees) == G.order
            assert all(G.order % d == 0 for d in t.degrees)
            ab = G.order // derived_subgroup(G).order
            mid = sum(d * (st.b - d) for d in t.degrees if 1 < d < st.b)
            assert G.order == st.T * st.b - ab * (st.b - 1) - mid
            assert (G.order == st.T * st.b) == G.is_abelian()
            assert st.T >= st.k
            if conjugacy_classes(G) is not t.classes:
                raise AssertionError("table must reuse the cached class data")
