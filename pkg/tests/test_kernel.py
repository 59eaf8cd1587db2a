"""The compiled and pure-Python kernels implement the same functions."""

import pytest
from hypothesis import given, strategies as st

from transferideals import _kernel_py

try:
    from transferideals import _kernel_cy
except ImportError:
    _kernel_cy = None

exps = st.lists(st.integers(0, 30), min_size=1, max_size=6)
pairs = st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.lists(st.integers(0, 30), min_size=n, max_size=n),
        st.lists(st.integers(0, 30), min_size=n, max_size=n),
    )
)


def test_pure_python_basics():
    assert _kernel_py.exp_add((1, 2), (3, 4)) == (4, 6)
    assert _kernel_py.exp_sub((3, 4), (1, 2)) == (2, 2)
    assert _kernel_py.exp_lcm((1, 5), (3, 2)) == (3, 5)
    assert _kernel_py.exp_divides((1, 2), (1, 3))
    assert not _kernel_py.exp_divides((2, 0), (1, 3))
    assert _kernel_py.exp_deg((2, 3, 4)) == 9


def test_grevlex_key_orders_by_degree_then_reverse_lex():
    k = _kernel_py.grevlex_key
    # e3*e4 beats e1*e6 in grevlex on six variables
    assert k((0, 0, 1, 1, 0, 0)) > k((1, 0, 0, 0, 0, 1))
    assert k((2, 0)) > k((1, 1)) > k((0, 2))


def test_addmul_terms_cancels():
    f = {(1, 0): 2}
    _kernel_py.addmul_terms(f, [((1, 0), 1), ((0, 1), 3)], (0, 0), -2, 0)
    assert f == {(0, 1): -6}


def test_addmul_terms_modular():
    f = {}
    _kernel_py.addmul_terms(f, [((1,), 4)], (1,), 2, 5)
    assert f == {(2,): 3}


@pytest.mark.skipif(_kernel_cy is None, reason="compiled kernel not built")
class TestKernelsAgree:
    @given(pairs)
    def test_exp_ops(self, ab):
        a, b = map(tuple, ab)
        assert _kernel_cy.exp_add(a, b) == _kernel_py.exp_add(a, b)
        assert _kernel_cy.exp_lcm(a, b) == _kernel_py.exp_lcm(a, b)
        assert _kernel_cy.exp_divides(a, b) == _kernel_py.exp_divides(a, b)
        assert _kernel_cy.exp_deg(a) == _kernel_py.exp_deg(a)
        if _kernel_py.exp_divides(b, a):
            assert _kernel_cy.exp_sub(a, b) == _kernel_py.exp_sub(a, b)

    @given(pairs)
    def test_grevlex_key_comparison(self, ab):
        a, b = map(tuple, ab)
        cy = _kernel_cy.grevlex_key
        py = _kernel_py.grevlex_key
        assert (cy(a) > cy(b)) == (py(a) > py(b))
        assert (cy(a) == cy(b)) == (py(a) == py(b))

    @given(
        st.lists(
            st.tuples(st.tuples(st.integers(0, 9), st.integers(0, 9)),
                      st.integers(-9, 9).filter(bool)),
            max_size=8,
        ),
        st.integers(-9, 9).filter(bool),
    )
    def test_addmul_terms(self, g_items, c):
        for modulus in (0, 7):
            f1 = {(1, 1): 5 % (modulus or 10**9)}
            f2 = dict(f1)
            gi = [(e, cc % modulus if modulus else cc) for e, cc in g_items]
            _kernel_py.addmul_terms(f1, gi, (1, 0), c % modulus if modulus else c, modulus)
            _kernel_cy.addmul_terms(f2, gi, (1, 0), c % modulus if modulus else c, modulus)
            assert f1 == f2
