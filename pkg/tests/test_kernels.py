"""Backend parity: both kernel implementations must agree byte for byte."""

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphsplice import enumerate_simple_graphs
from graphsplice._kernels import BACKEND, active, pure
from graphsplice.splicing import make_rule, products_first, products_second
from conftest import plf_graphs

try:
    from graphsplice._kernels import _speed
except ImportError:
    _speed = None

needs_compiled = pytest.mark.skipif(
    _speed is None, reason="compiled backend not built"
)


def test_backend_identifies_itself():
    assert pure.IMPLEMENTATION == "pure"
    assert BACKEND == active.IMPLEMENTATION
    assert BACKEND in ("pure", "compiled")


@needs_compiled
def test_compiled_identifies_itself():
    assert _speed.IMPLEMENTATION == "compiled"


def test_env_var_forces_pure_backend():
    env = dict(os.environ, GRAPHSPLICE_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "import graphsplice; print(graphsplice.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "pure"


@needs_compiled
def test_factorial_agreement():
    for m in range(15):
        assert pure.factorial(m) == _speed.factorial(m)
    assert _speed.factorial(13) == 6227020800


@needs_compiled
def test_canonical_form_trivial_orders():
    assert _speed.canonical_form(0, ()) == pure.canonical_form(0, ()) == b"0|"
    assert _speed.canonical_form(1, ()) == pure.canonical_form(1, ()) == b"1|"


@needs_compiled
def test_canonical_form_agreement_exhaustive():
    # every simple graph on up to 4 positions
    for g in enumerate_simple_graphs(4):
        assert pure.canonical_form(g.order, g.edges) == _speed.canonical_form(
            g.order, g.edges
        )


@needs_compiled
@given(plf_graphs())
def test_canonical_form_agreement_multigraphs(g):
    assert pure.canonical_form(g.order, g.edges) == _speed.canonical_form(
        g.order, g.edges
    )


@needs_compiled
@given(plf_graphs())
def test_cut_table_agreement(g):
    tp = pure.prepare_graph(g.order, g.edges)
    ts = _speed.prepare_graph(g.order, g.edges)
    assert tp.order == ts.order
    assert tp.edges == ts.edges
    assert tp.deg == ts.deg
    assert tp.ld == ts.ld
    assert tp.rd == ts.rd
    assert tp.rules == ts.rules
    assert tp.reflexive == ts.reflexive
    assert tp.powers == ts.powers
    assert tp.pre_intact == ts.pre_intact
    assert tp.pre_anchors == ts.pre_anchors
    assert tp.suf_intact == ts.suf_intact
    assert tp.suf_anchors == ts.suf_anchors
    assert tp.by_key == ts.by_key
    assert tp.rule_index == ts.rule_index


@needs_compiled
@given(plf_graphs(max_order=5, max_edges=8), plf_graphs(max_order=5, max_edges=8))
def test_pair_products_agreement(g, h):
    tp, up = pure.prepare_graph(g.order, g.edges), pure.prepare_graph(h.order, h.edges)
    ts, us = _speed.prepare_graph(g.order, g.edges), _speed.prepare_graph(h.order, h.edges)
    for ra in range(len(tp.rules)):
        for rb in range(len(up.rules)):
            compatible = (
                tp.reflexive[ra] == up.reflexive[rb]
                and tp.powers[ra] == up.powers[rb]
            )
            if compatible:
                assert pure.pair_products(tp, ra, up, rb) == _speed.pair_products(
                    ts, ra, us, rb
                )
            else:
                with pytest.raises(ValueError):
                    pure.pair_products(tp, ra, up, rb)
                with pytest.raises(ValueError):
                    _speed.pair_products(ts, ra, us, rb)


@needs_compiled
@given(plf_graphs(max_order=5, max_edges=8), plf_graphs(max_order=5, max_edges=8))
def test_products_direction_agreement(g, h):
    tp, up = pure.prepare_graph(g.order, g.edges), pure.prepare_graph(h.order, h.edges)
    ts, us = _speed.prepare_graph(g.order, g.edges), _speed.prepare_graph(h.order, h.edges)
    for ra in range(len(tp.rules)):
        for rb in range(len(up.rules)):
            if tp.reflexive[ra] != up.reflexive[rb] or tp.powers[ra] != up.powers[rb]:
                continue
            for direction in (1, 2):
                assert pure.products_direction(
                    tp, ra, up, rb, direction
                ) == _speed.products_direction(ts, ra, us, rb, direction)
    with pytest.raises(ValueError):
        _speed.products_direction(ts, 0, us, 0, 3)


@needs_compiled
@settings(deadline=None)
@given(plf_graphs(max_order=5, max_edges=8), plf_graphs(max_order=5, max_edges=8),
       st.integers(min_value=0, max_value=4))
def test_splice_pair_check_agreement(g, h, max_power):
    tp, up = pure.prepare_graph(g.order, g.edges), pure.prepare_graph(h.order, h.edges)
    ts, us = _speed.prepare_graph(g.order, g.edges), _speed.prepare_graph(h.order, h.edges)
    assert pure.splice_pair_check(tp, up, max_power) == _speed.splice_pair_check(
        ts, us, max_power
    )


@given(plf_graphs(max_order=5, max_edges=6), plf_graphs(max_order=5, max_edges=6))
def test_kernel_products_match_splicing_module(g, h):
    # the active kernel's raw products and the fragment-level splice must
    # build the same graphs in the same bijection order
    tg = active.prepare_graph(g.order, g.edges)
    th = active.prepare_graph(h.order, h.edges)
    for ra, rule_a in enumerate(tg.rules):
        for rb, rule_b in enumerate(th.rules):
            if tg.reflexive[ra] != th.reflexive[rb] or tg.powers[ra] != th.powers[rb]:
                continue
            s = make_rule(rule_a, rule_b)
            first = [(p.graph.order, p.graph.edges) for p in products_first(g, h, s)]
            assert first == active.pair_products(tg, ra, th, rb)
            second = [(p.graph.order, p.graph.edges) for p in products_second(g, h, s)]
            assert second == active.pair_products(th, rb, tg, ra)
