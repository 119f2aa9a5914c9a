import itertools

import pytest

from crossorder.errors import (
    ActionNotHomomorphism,
    ActionNotTransitive,
    NoIdentity,
    NotAssociative,
    NotASubgroup,
    NotPermutationTable,
    ParseError,
)
from crossorder.groups import (
    all_subgroups,
    cyclic_group,
    decomposition_group,
    inverse,
    left_cosets,
    make_setup,
    orbit,
    right_cosets,
    subgroup,
    trivial_subgroup,
    validate_setup,
    whole_group,
)
from helpers import transitive_setups

C2 = [[0, 1], [1, 0]]


def test_validate_example_setup():
    s = validate_setup({"group": {"order": 2, "names": ["1", "sigma"], "table": C2},
                        "ideals": {"count": 2, "action": [[0, 1], [1, 0]]}})
    assert s.n == 2 and s.r == 2
    assert s.act(1, 0) == 1


def test_validate_one_point_action():
    s = make_setup(C2, [[0], [0]])
    assert s.r == 1


def test_fixed_points_not_transitive():
    with pytest.raises(ActionNotTransitive):
        make_setup(C2, [[0, 1], [0, 1]])


def test_no_identity():
    with pytest.raises(NoIdentity):
        make_setup([[1, 0], [0, 1]], [[0], [0]])


def test_not_permutation_table():
    with pytest.raises(NotPermutationTable):
        make_setup([[0, 1, 2], [1, 1, 0], [2, 0, 1]], [[0]] * 3)


def test_not_associative_reports_first_triple():
    # Latin square with identity 0 that is not a group (order 5 loop)
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative) as exc:
        make_setup(loop, [[0]] * 5)
    first = next(
        (i, j, k)
        for i, j, k in itertools.product(range(5), repeat=3)
        if loop[loop[i][j]][k] != loop[i][loop[j][k]]
    )
    assert exc.value.witness == first
    assert "NotAssociative at" in str(exc.value)


def test_action_not_homomorphism():
    # C4 acting on two labels with the generator swapping but its square also swapping
    c4 = cyclic_group(4)
    with pytest.raises(ActionNotHomomorphism):
        make_setup(c4.table, [[0, 1], [1, 0], [1, 0], [1, 0]])


def test_malformed_document_is_parse_error():
    with pytest.raises(ParseError):
        validate_setup({"group": {"table": C2}})


def test_inverse():
    c2 = cyclic_group(2)
    assert inverse(1, c2) == 1
    assert inverse(0, c2) == 0
    c4 = cyclic_group(4)
    # scan row 1 for the identity
    assert inverse(1, c4) == c4.table[1].index(0) == 3


def test_decomposition_group(ex_setup, c2_dvr, s3_natural):
    assert decomposition_group(0, ex_setup).members == (0,)
    assert decomposition_group(0, c2_dvr).members == (0, 1)
    d = decomposition_group(0, s3_natural)
    stab = tuple(g for g in range(6) if s3_natural.ideals.perms[g][0] == 0)
    assert d.members == stab and len(d) == 2


def test_cosets(ex_setup, s3_natural):
    assert right_cosets(trivial_subgroup(ex_setup)) == [(0,), (1,)]
    assert left_cosets(whole_group(ex_setup)) == [(0, 1)]
    d = decomposition_group(0, s3_natural)
    grp = s3_natural.group
    direct = sorted({tuple(sorted(grp.mul(h, g) for h in d)) for g in range(6)})
    assert right_cosets(d) == direct
    assert len(direct) == 3 and all(len(c) == 2 for c in direct)
    direct_left = sorted({tuple(sorted(grp.mul(g, h) for h in d)) for g in range(6)})
    assert left_cosets(d) == direct_left and len(direct_left) == 3


def test_orbit(ex_setup, s3_natural):
    assert orbit(0, trivial_subgroup(ex_setup)) == {0}
    assert orbit(0, whole_group(ex_setup)) == {0, 1}
    d = decomposition_group(0, s3_natural)
    assert orbit(1, d) == {1, 2}


def test_subgroup_checked_constructor(s3_natural):
    with pytest.raises(NotASubgroup):
        subgroup(s3_natural, [0, 1, 2])
    assert len(subgroup(s3_natural, [0])) == 1


def test_all_subgroups_of_s3(s3_natural):
    orders = sorted(len(h) for h in all_subgroups(s3_natural))
    assert orders == [1, 2, 2, 2, 3, 6]


@pytest.mark.parametrize("label,setup", transitive_setups(), ids=lambda x: x if isinstance(x, str) else "")
def test_setup_invariants(label, setup):
    grp, perms = setup.group, setup.ideals.perms
    for g, h in itertools.product(range(setup.n), repeat=2):
        assert list(perms[grp.mul(g, h)]) == [perms[g][perms[h][m]] for m in range(setup.r)]
    for M in range(setup.r):
        d = decomposition_group(M, setup)
        assert len(d) == setup.n // setup.r
        for g in range(setup.n):
            conj = sorted(grp.mul(grp.mul(g, h), grp.inv(g)) for h in d)
            assert decomposition_group(perms[g][M], setup).members == tuple(conj)
    for h in all_subgroups(setup):
        assert len(right_cosets(h)) == len(left_cosets(h)) == setup.n // len(h)
