"""Cross-checks the hand-written engine against lrcalc. Skipped when lrcalc is not installed."""
import pytest

from app.models.partition_models import BoxSpec
from app.services.diagram_service import enumerate_basic_skew_diagrams, partitions_in_box
from app.services.lr_service import lr_coefficient, skew_character
from app.services.schubert_service import star_product

lrcalc = pytest.importorskip("lrcalc")


def as_counts(result):
    return {tuple(nu): coeff for nu, coeff in result.items() if coeff}


def test_skew_character_matches_lrcalc():
    for d in enumerate_basic_skew_diagrams(7, 5, 5):
        expected = as_counts(lrcalc.skew(list(d.outer.parts), list(d.inner.parts)))
        assert skew_character(d).as_dict() == expected, str(d)


def test_lr_coefficient_matches_lrcalc():
    box = BoxSpec(k=3, l=3)
    for lam in partitions_in_box(BoxSpec(k=4, l=4)):
        for mu in partitions_in_box(box):
            for nu in partitions_in_box(box):
                if mu.weight + nu.weight != lam.weight or not lam.contains(mu) or not lam.contains(nu):
                    continue
                expected = lrcalc.lrcoef(list(lam.parts), list(mu.parts), list(nu.parts))
                assert lr_coefficient(lam, mu, nu) == expected, f"{lam}; {mu}, {nu}"


@pytest.mark.parametrize("k,l", [(2, 2), (3, 2), (3, 3)])
def test_star_product_matches_bounded_mult(k, l):
    box = BoxSpec(k=k, l=l)
    for mu in partitions_in_box(box):
        for nu in partitions_in_box(box):
            expected = as_counts(lrcalc.mult(list(mu.parts), list(nu.parts), l, k))
            assert star_product(mu, nu, box).as_dict() == expected, f"{mu} * {nu} in {box}"
