import random
from math import comb

import pytest

from ramseykit import _pykernels, kernels
from ramseykit.coloring import Coloring
from ramseykit.construct import blow_up, pentagon_coloring

ckernels = pytest.importorskip("ramseykit._ckernels")


def samples():
    rng = random.Random(11)
    for p in range(0, 13):
        for r in (1, 2, 3):
            yield bytes(rng.randrange(r) for _ in range(comb(p, 2))), p
    yield Coloring.monochrome(12, 2).assignment, 12
    yield blow_up(pentagon_coloring(), Coloring.monochrome(2)).assignment, 10
    yield blow_up(Coloring.monochrome(3), pentagon_coloring()).assignment, 15
    circulant = Coloring.from_function(12, 2, lambda u, v: 0 if (v - u) % 12 in (1, 3, 9, 11) else 1)
    yield circulant.assignment, 12


@pytest.mark.parametrize("tri,p", list(samples()))
def test_backends_agree(tri, p):
    form_c, order_c = ckernels.canonical_form(tri, p)
    form_py, order_py = _pykernels.canonical_form(tri, p)
    assert form_c == form_py
    assert sorted(order_c) == sorted(order_py) == list(range(p))
    # the order really realizes the form
    c = Coloring(p, max(tri, default=0) + 1, tri)
    assert Coloring.from_function(p, c.r, lambda u, v: c.color(order_c[u], order_c[v])).assignment == form_c


def test_selected_backend():
    assert kernels.BACKEND in ("cython", "python")
