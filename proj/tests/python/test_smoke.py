import pytest

import arrangeclass as ac


def test_uip_and_signature():
    lst = ac.LefschetzList.parse("l=5 (1,4)(4,5)(3,4)(2,3)(1,2)")
    assert ac.check_uip(lst)
    assert ac.signature_of(lst) == "2^4 4^1"
    assert lst.lines == 5 and len(lst) == 5
    assert lst.pairs[0] == (1, 4)
    assert ac.LefschetzList(5, lst.pairs) == lst


def test_signature_lists():
    assert set(ac.admissible_signatures(4)) == {"4^1", "2^3 3^1", "2^6"}
    assert set(ac.admissible_signatures(5)) == {"5^1", "2^4 4^1", "2^4 3^2", "2^7 3^1", "2^10"}
    excluded = [row for row in ac.classify_signatures(7) if not row[1]]
    assert excluded and all(reason for _, _, reason in excluded)


def test_enumeration_and_similarity():
    omega = ac.enumerate_omega("2^6 3^3")
    assert len(omega) == 304
    assert all(ac.equiv_class_min(l) == l for l in omega[:20])
    assert len(ac.similarity_classes("2^6 3^3")) == 2
    table = dict(ac.relation_table("2^6 3^3"))
    assert table["----"] == 304
    assert table["+-+-"] == table["+++-"]


def test_moves_keep_the_lattice():
    for lst in ac.enumerate_omega("2^6 3^3")[:10]:
        form = ac.canonical_lattice(lst)
        for image in [ac.tau(lst), ac.mu(lst), ac.sigma(lst), *ac.triangle_moves(lst)]:
            assert ac.canonical_lattice(image) == form


def test_groups():
    lst = ac.LefschetzList.parse("l=5 (2,3)(2,4)(4,5)(1,3)(3,4)")
    assert ac.skeleton(lst, 5) == "1° 2⁻ 3⁻ 3⁺ 2⁻ 2⁺ 3⁺ 4⁺ 5°"
    f2 = ac.GroupPresentation(2, [])
    z2 = ac.GroupPresentation(2, [[1, 2, -1, -2]])
    assert ac.quotient_count(f2, "S3") == (36, 18)
    assert ac.abelianization(z2) == (2, [])
    assert ac.lcs_ranks(f2) == [2, 1, 2]
    assert ac.profiles_match(f2, z2) == "distinguished"
    rep = ac.enumerate_omega("2^9 3^2")[0]
    assert ac.structured_group(rep) == "Z + F2 + F2"
    expected = ac.structured_group_presentation("Z + F2 + F2")
    assert ac.profile(ac.presentation(rep, "projective")) == ac.profile(expected)
    assert ac.presentation(rep).to_plain().startswith("gens: 6")


def test_errors_and_render():
    with pytest.raises(ValueError):
        ac.LefschetzList.parse("l=3 (1,4)")
    with pytest.raises(ValueError):
        ac.enumerate_omega("2^3 4^1")
    with pytest.raises(RuntimeError):
        ac.enumerate_omega("2^12 3^1", 10, 1e-9)
    svg = ac.render_svg(ac.enumerate_omega("2^3 3^4")[0], "multipoint")
    assert svg.startswith("<svg") and svg.count('class="point"') == 4
