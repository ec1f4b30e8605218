import json
import re
from importlib import resources

import pytest

from sl2bounds import (
    E_set, SimpleComponent, b_bound, build, e_value, levi_ss_components,
    m_value, m_values, parabolic_table, principal_embedding, root_embedding,
)
from sl2bounds.bounds import BoundsError, _canonical


def _fixture():
    with resources.files("sl2bounds.data").joinpath(
            "parabolic_tables.json").open() as f:
        return json.load(f)


def _parse_levi(s):
    comps = [_canonical(SimpleComponent(f, int(r)))
             for f, r in re.findall(r"([A-G])(\d+)", s)]
    return sorted((c.family, c.rank) for c in comps)


def test_m_values_g2_principal():
    rs = build([("G", 2)])
    emb = principal_embedding(rs)
    assert m_value(rs, emb, 1) == 4
    assert m_value(rs, emb, 2) == 2


def test_m_values_a2_principal():
    rs = build([("A", 2)])
    emb = principal_embedding(rs)
    assert m_values(rs, emb).values == (2, 2)


def test_m_value_sentinel_zero_at_small_cap():
    rs = build([("G", 2)])
    assert m_value(rs, principal_embedding(rs), 1, cap=1) == 0


def test_m_positive_g2_all_embeddings():
    rs = build([("G", 2)])
    short = (1, 0)
    long_ = max(rs.positive_roots, key=sum)
    for emb in (principal_embedding(rs), root_embedding(rs, short),
                root_embedding(rs, long_)):
        mv = m_values(rs, emb, cap=24)
        assert all(m > 0 for m in mv.values), emb


def test_b_bound_g2():
    rs = build([("G", 2)])
    res = b_bound(rs, principal_embedding(rs))
    assert res.b == 8
    assert res.m_values.values == (4, 2)
    assert res.box_max_g0 == 7
    assert res.box_max_weight.coords == (1, 0)


def test_b_bound_errors_when_m_missing():
    rs = build([("G", 2)])
    with pytest.raises(BoundsError):
        b_bound(rs, principal_embedding(rs), cap=1)


def test_levi_components_examples():
    assert [str(c) for c in levi_ss_components(SimpleComponent("G", 2), 1)] \
        == ["A1"]
    assert [str(c) for c in levi_ss_components(SimpleComponent("E", 6), 2)] \
        == ["A5"]
    assert [str(c) for c in levi_ss_components(SimpleComponent("A", 3), 2)] \
        == ["A1", "A1"]


def test_parabolic_tables_match_golden():
    gold = _fixture()["tables"]
    for tname, tbl in gold.items():
        comp = SimpleComponent(tname[0], int(tname[1:]))
        rows = parabolic_table(comp)
        assert len(rows) == comp.rank
        for row, levi_s, dim_s in zip(rows, tbl["levis"], tbl["dims"]):
            got = sorted((_canonical(c).family, _canonical(c).rank)
                         for c in row.levi_ss_components)
            assert got == _parse_levi(levi_s), (tname, row.node)
            assert row.dim_g_mod_lss == dim_s, (tname, row.node)
            assert row.dim_g_mod_lss % 2 == 1
            assert 2 * row.dim_X == row.dim_g_mod_lss + 1


def test_parabolic_spot_values():
    assert [r.dim_g_mod_lss for r in parabolic_table(SimpleComponent("G", 2))] \
        == [11, 11]
    assert parabolic_table(SimpleComponent("E", 8))[7].dim_g_mod_lss == 115
    assert parabolic_table(SimpleComponent("B", 3))[1].dim_g_mod_lss == 15


def test_e_values_match_golden():
    for name, ev in _fixture()["e_values"].items():
        comp = SimpleComponent(name[0], int(name[1:]))
        assert e_value(comp) == ev, name


def test_type_a_closed_form():
    # for A_n, deleting node p+1 (q = n-1-p) gives
    # dim g/l_ss = dim A_n - dim A_p - dim A_q
    #           = n^2 - p^2 - q^2 + 2n - 2p - 2q
    for n in range(2, 9):
        rows = parabolic_table(SimpleComponent("A", n))
        for p, row in enumerate(rows):
            q = n - 1 - p
            assert row.dim_g_mod_lss == \
                n * n - p * p - q * q + 2 * n - 2 * p - 2 * q


def test_type_a_minimum_is_five_at_a2_only():
    vals = []
    for n in range(2, 9):
        for row in parabolic_table(SimpleComponent("A", n)):
            vals.append((n, row.dim_g_mod_lss))
    assert min(v for _, v in vals) == 5
    assert all(n == 2 for n, v in vals if v == 5)


ALL_SIMPLE = (
    [("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)] +
    [("C", n) for n in range(2, 9)] + [("D", n) for n in range(3, 9)] +
    [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


@pytest.mark.parametrize("fam,rank", ALL_SIMPLE)
def test_dim_x_exceeds_three_outside_a1_a2(fam, rank):
    rows = parabolic_table(SimpleComponent(fam, rank))
    if (fam, rank) in (("A", 1), ("A", 2)):
        return
    assert all(row.dim_X > 3 for row in rows)


def test_exclusion_set_sl3():
    got = [str(c) for c in E_set(8, 10)]
    assert got == sorted(_fixture()["exclusion_set_dim8"])
    assert len(got) == 14


def test_exclusion_set_small():
    assert [str(c) for c in E_set(3, 10)] == ["A1", "A2"]
    assert E_set(1, 10) == []


def test_exclusion_set_rank_cap_insufficient():
    with pytest.raises(BoundsError):
        E_set(50, 8)
