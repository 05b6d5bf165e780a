import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kmfuzzy import (FuzzyTernaryRelation, LatticeTable, PosetTable, TernaryRelation,
                     bm_from_fuzzy_metric, exponential_from_metric, nest_from_fuzzy_metric,
                     standard_from_metric)
from kmfuzzy import formats
from kmfuzzy.errors import ParseError, SchemaError
from kmfuzzy.oracle import gen_random_metric, gen_random_nest, gen_random_step_space


def rt(obj):
    return formats.loads(formats.dumps(obj))


def test_worked_file_loads(data_dir, worked):
    assert formats.load(data_dir / "worked_space.json") == worked


def test_diagonal_may_be_omitted(worked):
    obj = formats.to_json(worked)
    obj["entries"] = [[e for j, e in enumerate(row) if j != i] for i, row in enumerate(obj["entries"])]
    assert formats.from_json(obj) == worked


@given(seed=st.integers(0, 10 ** 6), n=st.integers(2, 5))
def test_roundtrip_lossless(seed, n):
    space = gen_random_step_space(n, 4, seed)
    assert rt(space) == space
    assert rt(nest_from_fuzzy_metric(space)) == nest_from_fuzzy_metric(space)
    nest = gen_random_nest(n, 3, seed)
    assert rt(nest) == nest
    d = gen_random_metric(n, seed)
    assert rt(d) == d
    assert rt(standard_from_metric(d)) == standard_from_metric(d)
    assert rt(exponential_from_metric(d)) == exponential_from_metric(d)
    B = bm_from_fuzzy_metric(space)
    assert rt(B) == B
    assert formats.from_json(json.loads(json.dumps(formats.fuzzy_to_json(B, sparse=True)))) == B


def test_relation_files():
    T = TernaryRelation(3, [(0, 1, 2), (2, 1, 0)])
    assert rt(T) == T
    p = PosetTable.chain(3)
    assert formats.detect(formats.to_json(p)) == "poset"
    assert bool((rt(p).leq == p.leq).all())
    join = [[0, 1], [1, 1]]
    meet = [[0, 0], [0, 1]]
    L = rt(LatticeTable(join, meet))
    assert L.join.tolist() == join


def test_fractions_are_strings(worked):
    text = formats.dumps(worked)
    assert '"1/2"' in text


def test_errors():
    with pytest.raises(ParseError):
        formats.loads("{not json")
    with pytest.raises(SchemaError):
        formats.loads('{"foo": 1}')
    with pytest.raises(ParseError):
        formats.loads('{"n": 1, "grades": [[[0.5]]]}')
    with pytest.raises(SchemaError):
        formats.loads('{"points": ["x"], "entries": [[{"bogus": 1}]]}')
    with pytest.raises(SchemaError):
        formats.loads('{"n": 2, "triples": [[0, 1, 5]]}')
