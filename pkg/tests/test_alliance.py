# tests/test_alliance.py
import sys
import os
import numpy as np
import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.alliance import (
    NEUTRALS_HOST,
    NEUTRALS_REDUCED,
    AllianceSpec,
    SigmaRho,
    alliance_table,
    check_alliance,
    check_sigma_rho,
    sigma_rho_spec,
    sigma_rho_translate,
)
from app.catalog import CATALOG, LISTING_DEFAULTS, catalog_entry, catalog_spec, list_catalog
from app.errors import BadParams, NeutralsOverlapSet, ParseError, SigmaRhoOutOfRange, UnknownParameter
from app.graph import Graph, VertexSet, generate
from app.intset import all_ints, at_least, at_most, finite


def test_k4_half_set_is_global_offensive_one_alliance():
    spec = AllianceSpec(all_ints(), at_least(1), is_global=True)
    assert check_alliance(generate("complete", [4]), VertexSet.of(4, [0, 1]), spec)


def test_full_triangle():
    spec = AllianceSpec(at_least(0), at_least(2), is_global=True)
    assert check_alliance(generate("complete", [3]), VertexSet.full(3), spec)


def test_c4_monopoly_boundary():
    c4 = generate("cycle", [4])
    x = VertexSet.of(4, [0, 2])
    assert check_alliance(c4, x, AllianceSpec(at_least(-2), at_least(1), is_global=True))
    assert not check_alliance(c4, x, AllianceSpec(at_least(-1), at_least(1), is_global=True))


def test_offensive_condition_ignores_non_boundary_vertices():
    p4 = generate("path", [4])
    s = VertexSet.of(4, [0])
    # vertex 1 is the only boundary vertex; 2 and 3 have no neighbor in S
    assert check_alliance(p4, s, AllianceSpec(all_ints(), at_least(0)))
    assert not check_alliance(p4, s, AllianceSpec(all_ints(), at_least(0), is_global=True))


def test_require_nonempty():
    g = generate("cycle", [5])
    assert check_alliance(g, VertexSet.empty(5), AllianceSpec(all_ints(), all_ints()))
    assert not check_alliance(g, VertexSet.empty(5), AllianceSpec(all_ints(), all_ints(), require_nonempty=True))


def test_neutral_modes():
    p3 = generate("path", [3])
    neutrals = VertexSet.of(3, [2])
    s = VertexSet.of(3, [0])
    base = AllianceSpec(all_ints(), all_ints(), is_global=True, neutrals=neutrals)
    # the neutral vertex 2 is not dominated by S in G
    assert not check_alliance(p3, s, base)
    assert not check_alliance(p3, s, AllianceSpec(all_ints(), all_ints(), True, neutrals, neutral_mode=NEUTRALS_HOST))
    assert check_alliance(p3, s, AllianceSpec(all_ints(), all_ints(), True, neutrals, neutral_mode=NEUTRALS_REDUCED))


def test_neutrals_shift_degree_differences():
    p3 = generate("path", [3])
    spec = AllianceSpec(at_least(0), at_least(2), is_global=True)
    s = VertexSet.of(3, [1])
    assert not check_alliance(p3, s, spec)
    assert check_alliance(p3, s, spec.with_neutrals(VertexSet.of(3, [0, 2])))


def test_neutrals_overlapping_set_raise():
    spec = AllianceSpec(all_ints(), all_ints(), neutrals=VertexSet.of(3, [1]))
    with pytest.raises(NeutralsOverlapSet):
        check_alliance(generate("path", [3]), VertexSet.of(3, [1]), spec)


def test_alliance_in_graph_power():
    p5 = generate("path", [5])
    s = VertexSet.of(5, [2])
    assert not check_alliance(p5, s, AllianceSpec(all_ints(), all_ints(), is_global=True))
    assert check_alliance(p5, s, AllianceSpec(all_ints(), all_ints(), is_global=True, power=2))


def test_alliance_table_matches_check():
    g = generate("random-gnp", [7, 1, 2], seed=11)
    masks = np.arange(1 << g.n, dtype=np.int64)
    specs = [
        AllianceSpec(at_least(0), at_least(2), is_global=True, require_nonempty=True),
        AllianceSpec(at_most(-1), at_most(-1)),
        AllianceSpec(finite([-1, 1]), finite([1]), power=2),
        AllianceSpec(at_least(0), at_least(1), is_global=True, neutrals=VertexSet.of(7, [6])),
    ]
    for spec in specs:
        table = alliance_table(g, spec, masks)
        for m in masks:
            s = VertexSet(g.n, int(m))
            if spec.neutrals is not None and not s.isdisjoint(spec.neutrals):
                assert not table[m]
            else:
                assert table[m] == check_alliance(g, s, spec)


def test_describe():
    spec = AllianceSpec(at_least(0), all_ints(), is_global=True, require_nonempty=True, power=2)
    assert spec.describe() == "D=>=0 O=all global nonempty power=2"
    assert AllianceSpec(finite([1]), at_most(-1)).describe() == "D={1} O=<=-1"


def test_spec_rejects_bad_power_and_mode():
    with pytest.raises(BadParams):
        AllianceSpec(all_ints(), all_ints(), power=0)
    with pytest.raises(BadParams):
        AllianceSpec(all_ints(), all_ints(), neutral_mode="sideways")


def test_sigma_rho_translate():
    assert sigma_rho_translate(SigmaRho.of([1], [1]), 3) == (finite([-1]), finite([-1]))
    assert sigma_rho_translate(SigmaRho.of([0], [1]), 3) == (finite([-3]), finite([-1]))
    full = SigmaRho.of(range(3), range(3))
    assert sigma_rho_translate(full, 2) == (finite([-2, 0, 2]), finite([-2, 0, 2]))
    with pytest.raises(SigmaRhoOutOfRange):
        sigma_rho_translate(SigmaRho.of([4], [1]), 3)


def test_check_sigma_rho():
    c4 = generate("cycle", [4])
    s = VertexSet.of(4, [0, 2])
    sr = SigmaRho.of([0], [2])
    assert check_sigma_rho(c4, s, sr)
    D, O = sigma_rho_translate(sr, 2)
    assert (D, O) == (finite([-2]), finite([2]))
    assert check_alliance(c4, s, AllianceSpec(D, O))
    assert check_sigma_rho(Graph.from_edges(3, []), VertexSet.empty(3), SigmaRho.of([0], [0]))


def test_sigma_rho_spec_is_global_without_zero_in_rho():
    assert sigma_rho_spec(SigmaRho.of([0], [1]), 2).is_global
    assert not sigma_rho_spec(SigmaRho.of([0], [0, 1]), 2).is_global


def test_sigma_rho_parse():
    sr = SigmaRho.parse("{0}", "{1,2}")
    assert sr == SigmaRho.of([0], [1, 2])
    assert str(sr) == "sigma={0} rho={1,2}"
    with pytest.raises(ParseError):
        SigmaRho.parse(">=0", "{1}")
    with pytest.raises(SigmaRhoOutOfRange):
        SigmaRho.of([-1], [0])


def test_catalog_specs():
    powerful = catalog_spec("powerful", {"r": 0})
    assert (powerful.D, powerful.O, powerful.is_global) == (at_least(0), at_least(2), True)
    signed = catalog_spec("signed-dominating", {"k": 1})
    assert (signed.D, signed.O, signed.is_global) == (at_least(0), at_least(2), True)
    boundary = catalog_spec("boundary-powerful", {"r": -3})
    assert (boundary.D, boundary.O, boundary.is_global) == (finite([-3]), finite([-1]), False)
    assert catalog_spec("monopoly").D == at_least(-1)
    assert catalog_spec("monopoly-paper").D == at_least(-2)
    assert catalog_spec("signed-efficient", {"k": 2}) == AllianceSpec(finite([1]), finite([3]), is_global=True)


def test_catalog_names_and_flags():
    assert catalog_entry("monopoly").name == "monopoly"
    assert catalog_entry("monopoly", {"r": 2}).name == "monopoly(r=2)"
    assert catalog_entry("monopoly", {"r": 2}).spec.power == 2
    assert catalog_entry("defensive", {"r": 1}).name == "defensive(1)"
    assert catalog_entry("half-independent-complement").complement
    assert catalog_entry("minus-dominating").neutral_search
    assert catalog_entry("monopoly-paper").status == "paper-erratum"
    assert catalog_entry("minus-dominating").status == "verified"
    assert catalog_entry("minus-dominating", {"k": 2}).status == "paper-erratum"
    assert "{0,1}" in catalog_entry("minus-dominating", {"k": 2}).provenance
    efficient_paper = catalog_entry("signed-efficient-paper", {"k": 2})
    assert (efficient_paper.spec.D, efficient_paper.spec.O) == (finite([2]), finite([4]))
    assert efficient_paper.status == "paper-erratum"
    assert catalog_entry("signed-total-dominating", {"k": 0}).min_degree_one


def test_catalog_errors():
    with pytest.raises(UnknownParameter):
        catalog_entry("friendly")
    with pytest.raises(BadParams):
        catalog_entry("defensive")
    with pytest.raises(BadParams):
        catalog_entry("signed-dominating", {"k": 0})
    with pytest.raises(BadParams):
        catalog_entry("sigma-rho", {"r": 2})


def test_list_catalog():
    entries = list_catalog()
    assert len(entries) == len(LISTING_DEFAULTS)
    assert {e.name.split("(")[0] for e in entries} <= set(CATALOG)
    row = entries[0].to_dict()
    assert set(row) == {"name", "spec", "status", "provenance", "min_degree_one", "complement", "neutral_search"}
