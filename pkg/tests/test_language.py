import pytest

from graphsplice import (
    SystemDefinitionError,
    canonical_form,
    contains,
    cycle,
    double_edge,
    is_isomorphic,
    language,
    make_rule,
    path,
    sigma_step,
    to_plf,
)
from graphsplice.language import (
    ClassInfo,
    LanguageConfig,
    SplicingSystem,
)

RUNNING_RULE = make_rule((1, 2), (2, 3))


def running_system():
    return SplicingSystem((cycle(3), cycle(4)), (RUNNING_RULE,))


def test_system_validation():
    with pytest.raises(SystemDefinitionError):
        SplicingSystem((), (RUNNING_RULE,))
    with pytest.raises(SystemDefinitionError):
        SplicingSystem((cycle(3),), ())
    with pytest.raises(SystemDefinitionError):
        SplicingSystem((double_edge(),), (RUNNING_RULE,))


def test_config_validation():
    with pytest.raises(SystemDefinitionError):
        LanguageConfig(max_iterations=-1)
    with pytest.raises(SystemDefinitionError):
        LanguageConfig(max_order=0)
    with pytest.raises(SystemDefinitionError):
        language(running_system(), LanguageConfig(max_order=3))


def test_sigma_step_two_cycle_classes():
    classes = sigma_step([cycle(3), cycle(4)], running_system())
    expected = {
        canonical_form(g)
        for g in (cycle(3), cycle(4), cycle(5), double_edge())
    }
    assert set(classes) == expected


def test_sigma_step_single_edge_is_a_fixpoint():
    system = SplicingSystem((path(2),), (make_rule((1, 2), (1, 2)),))
    classes = sigma_step([path(2)], system)
    assert set(classes) == {canonical_form(path(2))}


def test_sigma_step_without_applicable_combinations():
    # a gap rule paired with a vertex rule never recombines
    system = SplicingSystem((cycle(3),), (make_rule((1, 2), (1, 1)),))
    assert sigma_step([cycle(3)], system) == {}
    # rules whose positions exceed every operand contribute nothing
    tall = SplicingSystem((path(2),), (make_rule((5, 6), (5, 6)),))
    assert sigma_step([path(2)], tall) == {}


def test_one_iteration_reproduces_the_worked_example():
    res = language(running_system(), LanguageConfig(max_iterations=1))
    assert len(res) == 4
    for g in (cycle(3), cycle(4), cycle(5), double_edge()):
        assert contains(res, g)
    assert res.trace[0].new_classes == 2
    assert res.trace[1].raw_products == 16
    assert res.trace[1].new_classes == 2
    assert not res.saturated


def test_contains_respects_classes_only():
    res = language(running_system(), LanguageConfig(max_iterations=1))
    assert not contains(res, path(2))
    assert contains(res, to_plf(3, cycle(3).edges, (2, 1, 3)))


def test_zero_iterations_returns_axioms():
    res = language(running_system(), LanguageConfig(max_iterations=0))
    assert len(res) == 2
    assert contains(res, cycle(3))
    assert contains(res, cycle(4))
    assert not contains(res, cycle(5))
    assert not res.saturated


def test_axioms_deduplicate_by_class():
    system = SplicingSystem(
        (cycle(3), to_plf(3, cycle(3).edges, (3, 1, 2))),
        (RUNNING_RULE,),
    )
    res = language(system, LanguageConfig(max_iterations=0))
    assert len(res) == 1


def test_triangle_closure_saturates():
    """One triangle grows every longer cycle up to the cap, plus the
    double edge, then stops."""
    system = SplicingSystem((cycle(3),), (RUNNING_RULE,))
    res = language(system, LanguageConfig(max_iterations=10, max_order=8))
    assert res.saturated
    assert len(res) == 8

    by_iteration = {}
    for info in res.classes.values():
        by_iteration.setdefault(info.iteration, []).append(info.representative)
    assert sorted(g.order for g in by_iteration[1]) == [2, 4]
    for it in range(2, 7):
        (rep,) = by_iteration[it]
        assert is_isomorphic(rep, cycle(it + 3))

    raws = [t.raw_products for t in res.trace]
    assert raws == [0, 4, 24, 48, 80, 120, 168, 168]
    assert [t.new_classes for t in res.trace] == [1, 2, 1, 1, 1, 1, 1, 0]
    # the 9-cycle is recorded but, being oversize, never re-spliced
    assert [t.new_overcap for t in res.trace] == [0, 0, 0, 0, 0, 0, 1, 0]
    assert max(g.representative.order for g in res.classes.values()) == 9


def test_truncation_is_flagged():
    system = SplicingSystem((cycle(3),), (RUNNING_RULE,))
    res = language(system, LanguageConfig(max_iterations=3, max_order=8))
    assert not res.saturated
    assert len(res.trace) == 4


def test_classes_grow_monotonically():
    system = SplicingSystem((cycle(3),), (RUNNING_RULE,))
    res = language(system, LanguageConfig(max_iterations=6, max_order=8))
    counts = [t.new_classes for t in res.trace]
    for it, trace in enumerate(res.trace):
        seen = sum(counts[: it + 1])
        til_now = [
            info for info in res.classes.values() if info.iteration <= it
        ]
        assert len(til_now) == seen


def test_determinism():
    system = SplicingSystem((cycle(3),), (RUNNING_RULE,))
    config = LanguageConfig(max_iterations=6, max_order=8)
    a = language(system, config)
    b = language(system, config)
    assert a.classes == b.classes
    assert a.trace == b.trace
    assert a.saturated == b.saturated


def test_class_info_is_frozen():
    info = ClassInfo(cycle(3), 0)
    with pytest.raises(AttributeError):
        info.iteration = 1
