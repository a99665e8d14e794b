import itertools

import pytest

from lukas_vcf import CoeffTable, WeightPoly


def a(k, n):
    """Symbolic diagonal variable a_n^(k)."""
    return WeightPoly.var(k, n)


def brute_force_paths(family, p, n, j, q=0):
    """Every rise sequence of length n, filtered by the family rules.

    Deliberately naive: no pruning, no shared code with the library walker.
    """
    two_step = family in ("R", "S", "Shat")
    steps = (1, -p) if two_step else tuple(range(1, -p - 1, -1))
    hat = family in ("Dhat", "Shat")
    start = -j - q if hat else q
    end = -q if hat else j + q
    out = []
    for rises in itertools.product(steps, repeat=n):
        heights = list(itertools.accumulate(rises, initial=start))
        if heights[-1] != end:
            continue
        if family in ("D", "S") and min(heights) < q:
            continue
        if hat and max(heights) > -q:
            continue
        out.append((start, rises))
    return out


def brute_force_weight(family, p, n, j, q=0):
    total = WeightPoly.zero()
    for start, rises in brute_force_paths(family, p, n, j, q):
        w = WeightPoly.one()
        h = start
        for r in rises:
            if r != 1:
                w = w * a(-r, h + r)
            h += r
        total = total + w
    return total


@pytest.fixture(params=[1, 2, 3])
def p(request):
    return request.param


@pytest.fixture
def sym(p):
    return CoeffTable.symbolic(p)
