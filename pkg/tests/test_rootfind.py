import math

import numpy as np
import pytest

from qesolver.errors import SolverError
from qesolver.rootfind import bisect_root, scan_roots


def test_bisect_simple():
    root = bisect_root(math.cos, 1.0, 2.0)
    assert root == pytest.approx(math.pi / 2, rel=1e-13)


def test_bisect_endpoint_root():
    assert bisect_root(lambda x: x - 1.0, 1.0, 2.0) == 1.0


def test_bisect_no_bracket():
    with pytest.raises(SolverError):
        bisect_root(lambda x: x * x + 1.0, -1.0, 1.0)


def test_bisect_longdouble():
    two = np.longdouble(2)

    def f(x):
        return x * x - two

    root = bisect_root(f, np.longdouble(1), np.longdouble(2), rel_tol=1e-18)
    # tighter than float64 can represent
    assert abs(float(root * root - two)) < 1e-17


def test_scan_roots_cubic():
    roots = scan_roots(lambda x: (x - 1.0) * (x + 2.0) * (x - 0.25), -5.0, 5.0)
    assert len(roots) == 3
    np.testing.assert_allclose(roots, [-2.0, 0.25, 1.0], rtol=1e-12)


def test_scan_roots_none():
    assert scan_roots(lambda x: x * x + 1.0, -3.0, 3.0) == []


def test_scan_roots_dedup():
    # coarse scan hitting the same root from two panels must not duplicate it
    roots = scan_roots(lambda x: x, -1.0, 1.0, n_scan=2)
    assert roots == [0.0]


def test_scan_roots_even_multiplicity_missed():
    # documented limitation: tangential roots carry no sign change
    assert scan_roots(lambda x: (x - 0.5) ** 2, 0.0, 1.0, n_scan=101) == []
