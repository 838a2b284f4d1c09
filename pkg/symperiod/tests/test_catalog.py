"""
Symperiod Test Suite -- Catalog Tests.

Covers:
    - Lie group sphere dimensions (the sphere-dimension table)
    - Space descriptors: dimensions, labels, rational types
    - Enumeration
    - Catalog document validation
"""

import pytest

from symperiod.catalog.groups import GroupDescriptor, GroupFamily, group_spheres, sphere_table
from symperiod.catalog.loader import (
    _default_text,
    catalog_summary,
    clear_catalog_caches,
    load_catalog,
    parse_catalog,
)
from symperiod.catalog.spaces import (
    BettiSource,
    IrreducibleSpace,
    ProductSpace,
    Relation,
    SpaceKind,
    enumerate_spaces,
    rational_type,
    witnesses_for,
)
from symperiod.core.errors import CatalogSchemaError, InvalidParameter

S = IrreducibleSpace.sphere


def space(kind: SpaceKind, *params: int) -> IrreducibleSpace:
    return IrreducibleSpace(kind, params)


# ─────────────────────────────────────────────────────────────
# Groups
# ─────────────────────────────────────────────────────────────


class TestGroups:
    def test_exceptional_spheres(self):
        assert group_spheres(GroupDescriptor.parse("E8")) == (3, 15, 23, 27, 35, 39, 47, 59)
        assert group_spheres(GroupDescriptor.parse("G2")) == (3, 11)
        assert group_spheres(GroupDescriptor.parse("F4")) == (3, 11, 15, 23)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_classical_families(self, n):
        assert group_spheres(GroupDescriptor(GroupFamily.SP, n)) == tuple(range(3, 4 * n, 4))
        assert group_spheres(GroupDescriptor(GroupFamily.SPIN, 2 * n + 1)) == tuple(range(3, 4 * n, 4))
        assert group_spheres(GroupDescriptor(GroupFamily.SPIN, 2 * n)) == tuple(range(3, 4 * n - 4, 4)) + (2 * n - 1,)
        assert group_spheres(GroupDescriptor(GroupFamily.U, n)) == tuple(range(1, 2 * n, 2))
        assert group_spheres(GroupDescriptor(GroupFamily.SU, n)) == tuple(range(3, 2 * n, 2))

    def test_so_resolves_to_spin(self):
        assert group_spheres(GroupDescriptor.parse("SO(7)")) == group_spheres(GroupDescriptor.parse("Spin(7)"))

    def test_circle(self):
        assert group_spheres(GroupDescriptor.parse("Spin(2)")) == (1,)

    def test_dimension(self):
        assert GroupDescriptor.parse("E8").dimension == 248
        assert GroupDescriptor.parse("SU(3)").dimension == 8
        assert GroupDescriptor.parse("Sp(2)").rank == 2

    def test_parse_rejects_unknown(self):
        with pytest.raises(InvalidParameter):
            GroupDescriptor.parse("E9")

    def test_parse_rejects_small_parameter(self):
        with pytest.raises(InvalidParameter):
            GroupDescriptor.parse("SU(1)")

    def test_sphere_table_rows(self):
        rows = sphere_table()
        assert len(rows) == 10
        assert rows[-1] == ("E8", "3 15 23 27 35 39 47 59", (3, 15, 23, 27, 35, 39, 47, 59))
        assert rows[0][:2] == ("Sp(n)", "3 7 ... 4n-1")


# ─────────────────────────────────────────────────────────────
# Spaces
# ─────────────────────────────────────────────────────────────


class TestSpaces:
    @pytest.mark.parametrize(
        "s, dim",
        [
            (S(5), 5),
            (space(SpaceKind.CP, 4), 8),
            (space(SpaceKind.HP, 3), 12),
            (IrreducibleSpace(SpaceKind.CAP2), 16),
            (IrreducibleSpace(SpaceKind.G2SO4), 8),
            (space(SpaceKind.REAL_GR, 3, 8), 24),
            (space(SpaceKind.COMPLEX_GR, 2, 4), 16),
            (space(SpaceKind.QUAT_GR, 2, 2), 16),
            (space(SpaceKind.SP_MOD_U, 4), 20),
            (space(SpaceKind.SO_MOD_U, 5), 20),
            (space(SpaceKind.SU_MOD_SO, 6), 20),
            (space(SpaceKind.SU_MOD_SP, 4), 27),
            (IrreducibleSpace(SpaceKind.EVIII), 128),
            (IrreducibleSpace.lie_group("E8"), 248),
        ],
    )
    def test_dimensions(self, s, dim):
        assert s.dim == dim

    def test_labels(self):
        assert space(SpaceKind.REAL_GR, 3, 8).label == "GrR(3,8)"
        assert space(SpaceKind.SU_MOD_SO, 6).label == "AI(6)"
        assert IrreducibleSpace.lie_group("E8").label == "group:E8"
        assert IrreducibleSpace(SpaceKind.G2SO4).label == "G"
        assert IrreducibleSpace(SpaceKind.EVII).label == "EVII"
        assert ProductSpace((S(17), S(20))).label == "S^17 x S^20"

    def test_equal_rank_and_source(self):
        assert space(SpaceKind.SP_MOD_U, 4).equal_rank
        assert not space(SpaceKind.SU_MOD_SO, 6).equal_rank
        assert space(SpaceKind.SU_MOD_SO, 6).source is BettiSource.WITNESS
        assert IrreducibleSpace.lie_group("G2").source is BettiSource.COMPUTED

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameter):
            space(SpaceKind.REAL_GR, 5, 3)
        with pytest.raises(InvalidParameter):
            space(SpaceKind.CP)
        with pytest.raises(InvalidParameter):
            space(SpaceKind.SO_MOD_U, 1)
        with pytest.raises(InvalidParameter):
            IrreducibleSpace(SpaceKind.EI, (), GroupDescriptor.parse("E6"))

    def test_empty_product(self):
        with pytest.raises(InvalidParameter):
            ProductSpace(())

    def test_rational_types(self):
        assert rational_type(space(SpaceKind.CP, 1)) == (S(2),)
        assert rational_type(space(SpaceKind.HP, 1)) == (S(4),)
        assert rational_type(space(SpaceKind.SU_MOD_SP, 2)) == (S(5),)
        assert rational_type(space(SpaceKind.SO_MOD_U, 3)) == (space(SpaceKind.CP, 3),)
        assert rational_type(space(SpaceKind.REAL_GR, 2, 2)) == (S(2), S(2))
        assert rational_type(IrreducibleSpace.lie_group("SU(2)")) == (S(3),)
        assert rational_type(space(SpaceKind.HP, 3)) == (space(SpaceKind.HP, 3),)

    def test_witnesses(self):
        (w,) = witnesses_for(space(SpaceKind.SU_MOD_SO, 6))
        assert (w.degree, w.relation, w.value) == (5, Relation.AT_LEAST, 1)
        assert witnesses_for(space(SpaceKind.SU_MOD_SO, 5)) == []
        assert witnesses_for(space(SpaceKind.SP_MOD_U, 4)) == []

    def test_hp_pattern_witness(self):
        ws = witnesses_for(space(SpaceKind.REAL_GR, 3, 7))
        assert [w.degree for w in ws] == list(range(8))
        assert [w.value for w in ws] == [1, 0, 0, 0, 1, 0, 0, 0]


class TestEnumeration:
    def test_bounded_sorted_unique(self):
        spaces = enumerate_spaces(20, 4)
        assert spaces
        assert all(s.dim <= 20 for s in spaces)
        assert len(set(spaces)) == len(spaces)
        assert spaces == sorted(spaces, key=IrreducibleSpace.sort_key)

    def test_members(self):
        spaces = enumerate_spaces(20, 4)
        assert S(20) in spaces
        assert IrreducibleSpace(SpaceKind.CAP2) in spaces
        assert space(SpaceKind.QUAT_GR, 2, 2) in spaces
        assert space(SpaceKind.HP, 5) not in spaces

    def test_kind_filter(self):
        spaces = enumerate_spaces(30, 6, kinds=[SpaceKind.HP])
        assert {s.kind for s in spaces} == {SpaceKind.HP}

    def test_degenerate_bounds(self):
        assert enumerate_spaces(0, 5) == []


# ─────────────────────────────────────────────────────────────
# Catalog document
# ─────────────────────────────────────────────────────────────


class TestCatalogDocument:
    def test_summary(self):
        assert catalog_summary(load_catalog()) == {
            "groups": 10,
            "families": 23,
            "table_2_rows": 7,
            "table_3_rows": 12,
        }

    def test_invalid_json(self):
        with pytest.raises(CatalogSchemaError):
            parse_catalog("not json")

    def test_missing_fields(self):
        with pytest.raises(CatalogSchemaError):
            parse_catalog("{}")

    def test_table_row_needs_obstruction(self):
        text = _default_text().replace('"cited_obstruction": "b_5>0",', "", 1)
        with pytest.raises(CatalogSchemaError):
            parse_catalog(text)

    def test_load_from_path(self, tmp_path):
        path = tmp_path / "catalog.json"
        path.write_text(_default_text(), encoding="utf-8")
        document = load_catalog(path)
        assert document.family("EIX").quotient == "E8/E7xSU(2)"
        assert document.group("Spin", "even").label == "Spin(2n)"

    def test_clearing_refreshes_derived_caches(self, tmp_path, monkeypatch):
        g2 = GroupDescriptor.parse("G2")
        assert group_spheres(g2) == (3, 11)
        path = tmp_path / "catalog.json"
        text = _default_text().replace('"label": "G2", "spheres": [3, 11]', '"label": "G2", "spheres": [3, 13]')
        path.write_text(text, encoding="utf-8")
        monkeypatch.setenv("SYMPERIOD_CATALOG", str(path))
        try:
            clear_catalog_caches()
            assert group_spheres(g2) == (3, 13)
        finally:
            monkeypatch.undo()
            clear_catalog_caches()
        assert group_spheres(g2) == (3, 11)
