from __future__ import annotations

import json
from itertools import product

import pytest

from centralsoft import bottom, family_union, leq
from centralsoft import laws
from centralsoft.algebra import CentralSoftSet
from centralsoft.errors import EnumerationTooLarge, UnknownLaw
from centralsoft.laws import (
    LAWS,
    check_law,
    enumerate_css,
    lub_oracle,
    small_context,
)
from centralsoft.workspace import parse_workspace


@pytest.mark.parametrize("m, n, expected", [(1, 1, 4), (2, 2, 64), (0, 1, 2), (1, 2, 16)])
def test_enumeration_counts(m, n, expected):
    sets = enumerate_css(small_context(m, n))
    assert len(sets) == expected
    assert len(set(sets)) == expected


def test_enumeration_is_deterministic():
    ctx = small_context(2, 2)
    assert enumerate_css(ctx) == enumerate_css(ctx)


def test_enumeration_limit():
    with pytest.raises(EnumerationTooLarge):
        enumerate_css(small_context(5, 5))


def test_unknown_law():
    with pytest.raises(UnknownLaw):
        check_law("commutes_with_everything", small_context(1, 1))


def test_lub_oracle_small():
    ctx = small_context(1, 1)
    sets = enumerate_css(ctx)
    assert lub_oracle([], ctx) == bottom(ctx)
    for x in sets:
        assert lub_oracle([x], ctx) == x
    for x, y in product(sets, repeat=2):
        assert lub_oracle([x, y], ctx) == family_union([x, y])


def test_lub_oracle_by_brute_force():
    # least upper bound by direct quadratic search, no precomputed tables
    ctx = small_context(1, 2)
    sets = enumerate_css(ctx)
    for x, y in product(sets[::5], repeat=2):
        bounds = [u for u in sets if leq(x, u) and leq(y, u)]
        least = [u for u in bounds if all(leq(u, v) for v in bounds)]
        assert least == [lub_oracle([x, y], ctx)]


@pytest.mark.parametrize("law", sorted(LAWS))
def test_each_law_exhaustive_tiny(law):
    report = check_law(law, small_context(1, 2))
    assert report.passed, report.counterexamples[:1]
    assert report.failures == 0
    assert report.mode == "exhaustive" and report.seed is None


@pytest.mark.parametrize("law", sorted(LAWS))
def test_each_law_sampled(law):
    ctx = small_context(4, 4)
    report = check_law(law, ctx, mode="sampled", count=500, seed=3)
    assert report.passed and report.count == 500
    again = check_law(law, ctx, mode="sampled", count=500, seed=3)
    assert again == report


def test_instance_counts():
    ctx = small_context(1, 1)
    assert check_law("demorgan", ctx).count == 16
    assert check_law("assoc", ctx).count == 64
    assert check_law("family_lub", ctx).count == 1 + 4 + 16 + 64


def test_harness_finds_counterexamples(monkeypatch):
    def broken_union(a, b):
        # plain pointwise union ignores central sets
        return CentralSoftSet(a.context, a.central | b.central, [x | y for x, y in zip(a.images, b.images)])

    monkeypatch.setattr(laws, "union", broken_union)
    ctx = small_context(1, 2)
    report = check_law("demorgan", ctx)
    assert not report.passed
    assert report.failures > 0
    assert 0 < len(report.counterexamples) <= laws.MAX_COUNTEREXAMPLES

    # counterexamples are replayable workspace documents
    cex = report.counterexamples[0]
    ws = parse_workspace(json.dumps(cex["workspace"]))
    a, b = (ws.get_set(name) for name in cex["args"])
    assert not laws.LAWS["demorgan"].predicate(a, b)
    monkeypatch.undo()
    assert laws.LAWS["demorgan"].predicate(a, b)


def test_report_document():
    report = check_law("diff_shrink", small_context(1, 1))
    doc = report.to_dict()
    assert doc["law"] == "diff_shrink"
    assert doc["passed"] is True and doc["counterexamples"] == []
    assert doc["count"] == 16
    text = laws.render_reports([report])
    assert "diff_shrink" in text and "PASS" in text


def test_bad_mode():
    with pytest.raises(ValueError):
        check_law("assoc", small_context(1, 1), mode="quick")
