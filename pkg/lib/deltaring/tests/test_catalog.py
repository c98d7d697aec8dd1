import pytest

from deltaring.catalog import DEFAULT_ENTRIES, TIER_NAMES, Catalog, tier_of, tiers_up_to
from deltaring.expr import Evaluator
from deltaring.limits import limits

TIERS = [
    (2, 'small'),
    (32, 'small'),
    (33, 'medium'),
    (256, 'medium'),
    (1024, 'large'),
    (2401, 'huge'),
]


@pytest.mark.parametrize('order, tier', TIERS)
def test_tier_of(order, tier):
    assert tier_of(order) == tier


def test_tiers_up_to():
    assert tiers_up_to('small') == ['small']
    assert tiers_up_to('large') == ['small', 'medium', 'large']
    assert tiers_up_to('medium', include_huge=True) == ['small', 'medium', 'huge']
    assert tiers_up_to('huge') == TIER_NAMES
    with pytest.raises(ValueError):
        tiers_up_to('enormous')


def test_default_entries_are_canonical():
    catalog = Catalog(tier='huge')
    assert [entry.text for entry in catalog.entries()] == [text for text, _ in DEFAULT_ENTRIES]


def test_selected_tiers(evaluator):
    catalog = Catalog(evaluator, tier='small')
    assert catalog.entries()
    assert all(entry.order <= 32 for entry in catalog.entries())
    assert 'M(2,Z4)' not in [entry.text for entry in catalog.entries()]
    assert 'M(2,Z4)' in [entry.text for entry in Catalog(evaluator).entries()]


def test_declared_orders_match_built_orders(evaluator):
    for text, R in Catalog(evaluator, tier='medium').rings():
        declared = dict(DEFAULT_ENTRIES)[text]
        assert R.order == declared, text


def test_order_cap_skips_rings():
    catalog = Catalog(Evaluator(), tier='medium', entries=[('Z2', 2), ('M(2,Z3)', 81)])
    with limits.override(max_order=64):
        assert [text for text, _ in catalog.rings()] == ['Z2']


def test_custom_entries(evaluator):
    catalog = Catalog(evaluator, tier='small', entries=[('prod( Z2 , Z2 )', 4)])
    (text, R), = catalog.rings()
    assert text == 'prod(Z2,Z2)'
    assert catalog.ring(text) is R
