"""Shared independent oracles for the test suite.

These deliberately avoid the library's own code paths: conjugacy classes by
raw double loops over image tuples, containment checks by set algebra, and
matrix comparison up to row/column permutation by explicit search.
"""

from itertools import permutations as iter_permutations

from frobgraph.catalog import construct, parse_group_spec


def group(spec_text):
    return construct(parse_group_spec(spec_text))


def brute_conjugacy_partition(G):
    """Conjugacy classes by conjugating every element by every element."""
    elems = [p.images for p in G.elements]
    n = G.degree

    def compose(a, b):
        return tuple(a[x] for x in b)

    def inverse(a):
        out = [0] * n
        for i, v in enumerate(a):
            out[v] = i
        return tuple(out)

    classes = []
    seen = set()
    for x in elems:
        if x in seen:
            continue
        orbit = {compose(compose(g, x), inverse(g)) for g in elems}
        seen |= orbit
        classes.append(orbit)
    return classes


def brute_core(G, H):
    """Intersection of all conjugates of H, on raw index sets."""
    K = set(H.indices)
    for g in range(G.order):
        K &= {G.conj(g, h) for h in H.indices}
    return frozenset(K)


def matrices_permutation_equal(A, B):
    """Whether B is A with rows and columns permuted (small matrices only)."""
    A = [tuple(r) for r in A]
    B = [tuple(r) for r in B]
    if len(A) != len(B) or len(A[0]) != len(B[0]):
        return False
    assert len(A) <= 8, "row search is factorial; keep the smaller side small"
    b_cols = sorted(zip(*B))
    for perm in iter_permutations(range(len(A))):
        a_cols = sorted(zip(*[A[i] for i in perm]))
        if a_cols == b_cols:
            return True
    return False


def subgroup_of_order(G, order, which=0):
    from frobgraph.subgroups import enumerate_subgroup_classes

    matches = [c for c in enumerate_subgroup_classes(G) if c.order == order]
    return matches[which].rep
