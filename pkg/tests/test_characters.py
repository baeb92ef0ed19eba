from itertools import product

import pytest

from weylprim.characters import dim_weyl, lowest_drop, multiplicity, weight_multiplicities
from weylprim.errors import NotDominantError
from weylprim.roots import Weight
from weylprim.tableaux import coherent_shape, content_for_drop, enumerate_standard


def test_dim_examples():
    assert dim_weyl(Weight((4, 3))) == 90
    assert dim_weyl(Weight((0, 0, 0))) == 1
    assert dim_weyl(Weight((3, 3, 1, 2))) == 93600
    assert dim_weyl(Weight((5, 1, 2))) == 1320
    assert dim_weyl(Weight((7,))) == 8
    with pytest.raises(NotDominantError):
        dim_weyl(Weight((1, -2)))


def test_adjoint_zero_weight():
    assert multiplicity(Weight((1, 1)), (1, 1)) == 2


def test_lowest_drop():
    assert lowest_drop(Weight((4, 3))) == (7, 7)
    assert lowest_drop(Weight((1, 0, 0))) == (1, 1, 1)


def _tableau_count(omega, drop):
    shape = coherent_shape(omega, first=1)
    content = content_for_drop(shape, drop)
    return 0 if content is None else len(enumerate_standard(shape, content))


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_freudenthal_matches_semistandard_count(rank):
    for coords in product(range(3), repeat=rank):
        omega = Weight(coords)
        mults = weight_multiplicities(omega)
        assert sum(mults.values()) == dim_weyl(omega)
        for drop, m in mults.items():
            assert _tableau_count(omega, drop) == m, (coords, drop)
