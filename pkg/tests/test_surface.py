from __future__ import annotations

import json

import pytest

from acforge.carter import build_complex
from acforge.gauss import parse_gauss_code
from acforge.spanning import spanning_solution
from acforge.surface import (
    ArcStep,
    BandStep,
    build_surface,
    canonical_slice_genus_of_diagram,
    homology_basis,
    surface_genus,
    surface_to_json,
)

from fixtures import (
    CODE_499,
    CODE_52025,
    CODE_687548,
    CODE_FIGURE8,
    CODE_TREFOIL,
    COMPOSITE_FACES_687548,
    SURFACE_499,
    SURFACE_52025,
    SURFACE_687548,
    B2T_687548,
    face_rows,
    match_faces,
)


def surf(code, **kw):
    cx = build_complex(parse_gauss_code(code))
    return build_surface(spanning_solution(cx), **kw)


@pytest.mark.parametrize(
    "code,want",
    [(CODE_499, SURFACE_499), (CODE_52025, SURFACE_52025),
     (CODE_687548, SURFACE_687548)],
)
def test_surface_counts(code, want):
    F = surf(code)
    assert F.euler == want["euler"]
    assert F.genus == surface_genus(F) == want["genus"]
    assert len(F.subsurfaces) == want["subsurfaces"]
    assert len(F.bands) == F.complex.n  # one band per crossing


def test_sheet_heights_follow_group_order():
    F = surf(CODE_687548)
    assert [s.height for s in F.subsurfaces] == [0, 1, 2, 3]
    assert [s.index for s in F.subsurfaces] == [0, 1, 2, 3]
    assert [s.epsilon for s in F.subsurfaces] == F.solution.epsilons


def test_composite_sheet_of_687548_uses_four_reference_faces():
    F = surf(CODE_687548)
    corr = match_faces(face_rows(F.complex), B2T_687548)
    big = max(F.subsurfaces, key=lambda s: len(s.faces))
    assert {corr[k][0] for k in big.faces} == COMPOSITE_FACES_687548


def test_euler_count_is_cells():
    # chi = (faces' cells) - bands: V - E + F over the whole sandwich
    for code in (CODE_499, CODE_52025, CODE_687548, CODE_TREFOIL):
        F = surf(code)
        assert F.euler == sum(s.euler for s in F.subsurfaces) - len(F.bands)
        # boundary is the knot: 2n arc segments in knot order
        assert len(F.boundary) == 2 * F.complex.n
        arcs = sorted(a for a, _ in F.boundary)
        assert arcs == list(range(1, 2 * F.complex.n + 1))


def test_arc_carrier_matches_cycles():
    F = surf(CODE_52025)
    sol = F.solution
    for arc, grp in F.arc_carrier.items():
        cyc = next(
            i for i, c in enumerate(sol.cycles) if arc in c
        )
        assert sol.group_of_cycle(cyc) == grp


def test_band_ends_sit_on_their_sheets():
    F = surf(CODE_687548)
    for b in F.bands:
        assert b.sign == F.diagram.arrows[b.label].sign
        for end in (b.a, b.b):
            sheet = F.subsurfaces[end.layer]
            assert b.label in sheet.crossings
            assert end.corner in ("NW", "NE", "SW", "SE")


def test_layer_queries():
    F = surf(CODE_499)
    for arc in range(1, 9):
        layers = F.layers_of_arc(arc)
        assert F.arc_carrier[arc] in layers
    with pytest.raises(KeyError):
        F.band_at(99)


# --- homology ----------------------------------------------------------------


@pytest.mark.parametrize("code", [CODE_499, CODE_52025, CODE_687548,
                                  CODE_TREFOIL, CODE_FIGURE8])
def test_homology_basis_has_rank_two_genus(code):
    F = surf(code)
    basis = homology_basis(F)
    assert len(basis) == 2 * F.genus == 1 - F.euler
    for cyc in basis:
        assert cyc.steps
        for st in cyc.steps:
            assert isinstance(st, (ArcStep, BandStep))


def test_499_basis_cycles_each_cross_two_bands():
    F = surf(CODE_499)
    for cyc in homology_basis(F):
        bands = [st for st in cyc.steps if isinstance(st, BandStep)]
        assert len(bands) == 2


def test_canonical_slice_genus():
    vals = {
        CODE_499: 1,
        CODE_52025: 2,
        CODE_687548: 1,
        CODE_TREFOIL: 1,
        CODE_FIGURE8: 1,
    }
    for code, want in vals.items():
        assert canonical_slice_genus_of_diagram(parse_gauss_code(code)) \
            == want
    assert canonical_slice_genus_of_diagram(parse_gauss_code("")) == 0


# --- heights override --------------------------------------------------------


def test_height_override_is_recorded():
    cx = build_complex(parse_gauss_code(CODE_499))
    sol = spanning_solution(cx)
    F = build_surface(sol, heights=[2, 0, 1])
    assert [s.height for s in F.subsurfaces] == [2, 0, 1]
    assert surface_genus(F) == 1


# --- serialization ------------------------------------------------------------


def test_surface_to_json_shape():
    F = surf(CODE_499)
    obj = surface_to_json(F)
    json.dumps(obj)  # serializable
    assert set(obj) >= {"subsurfaces", "bands", "euler", "genus"}
    assert obj["euler"] == -1 and obj["genus"] == 1
    for b in obj["bands"]:
        # cycles are reported 1-based
        assert b["a"]["cycle"] >= 1 and b["b"]["cycle"] >= 1
        assert set(b) == {"crossing", "sign", "a", "b"}


def test_unknot_surface():
    F = surf("")
    assert F.euler == 1 and F.genus == 0
    assert not F.bands and len(F.subsurfaces) == 1
    assert homology_basis(F) == []
