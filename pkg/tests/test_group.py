import random
from collections import Counter

import pytest

from g9cov import reference
from g9cov.cyclo import CycNum
from g9cov.group import (NotFinitelyClosedError, class_orders, class_sizes,
                         closure, standard_generators)
from g9cov.linalg import Mat


def test_closure_sizes(table):
    assert len(table) == 192
    t, d = standard_generators()
    assert len(closure([("D", d)])) == 4
    assert len(closure([("I", Mat.identity(2))])) == 1


def test_closure_guard():
    shear = Mat.from_rows([[1, 1], [0, 1]])
    with pytest.raises(NotFinitelyClosedError):
        closure([("S", shear)], limit=500)


def test_class_count_and_sizes(table):
    assert len(table.classes) == 32
    assert Counter(len(b) for b in table.classes) == Counter({1: 8, 6: 12, 12: 4, 8: 8})
    assert sum(len(b) for b in table.classes) == 192
    assert class_sizes(table) == reference.CLASS_SIZES


def test_element_orders(table):
    t, d = standard_generators()
    assert table.orders[table.lookup(t.matmul(d))] == 24
    assert table.orders[table.identity] == 1
    z5td = t.matmul(d).scale(CycNum.zeta(5))
    assert table.orders[table.lookup(z5td)] == 3
    assert all(192 % o == 0 for o in table.orders)
    assert class_orders(table) == reference.CLASS_ORDERS


def test_reference_classes_distinct(table):
    assert len(table.class_reps) == 32
    assert len({table.class_of[i] for i in table.class_reps}) == 32
    # identity class is the singleton at position 1
    assert table.class_reps[0] == table.identity
    assert len(table.classes[table.class_of[table.identity]]) == 1
    # the class of D has size 6 and order 4
    _, d = standard_generators()
    pos = table.class_labels.index("D")
    assert class_sizes(table)[pos] == 6
    assert class_orders(table)[pos] == 4
    assert table.class_of[table.lookup(d)] == table.class_block_order[pos]


def test_words_reevaluate(table):
    for e in table.elements:
        assert table.evaluate_word(e.word) == e.mat
    # BFS words are shortest: lengths are monotone along discovery order
    lengths = [len(e.word) for e in table.elements]
    assert lengths == sorted(lengths)


def test_group_closed_under_product_and_inverse(table):
    n = len(table)
    for i in range(n):
        assert 0 <= table.inverse[i] < n
        assert table.product[i][table.inverse[i]] == table.identity
    assert all(0 <= v < n for row in table.product for v in row)


def test_reference_matching_rejects_wrong_group():
    from g9cov.group import ReferenceMismatchError, match_reference_classes
    _, d = standard_generators()
    small = closure([("D", d)])
    small.compute_products()
    small.compute_orders()
    small.compute_classes()
    with pytest.raises(ReferenceMismatchError):
        match_reference_classes(small)


def test_conjugation_permutes_classes(table):
    rng = random.Random(31)
    for g in rng.sample(range(len(table)), 10):
        ginv = table.inverse[g]
        for block in table.classes:
            image = {table.product[table.product[g][h]][ginv] for h in block}
            assert image == set(block)
