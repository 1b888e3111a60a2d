import pytest
from sympy import Rational

from src.coxeter import (UnknownCoxeterTypeError, braid_type, budur_check, degrees,
                         has_witness_root, nd_root_check, opdam_bg, supported_labels)
from src.factored import FactoredBPoly


@pytest.mark.parametrize('label, expected', [
    ('A1', (2,)),
    ('A_3', (2, 3, 4)),
    ('B3', (2, 4, 6)),
    ('C3', (2, 4, 6)),
    ('D4', (2, 4, 4, 6)),
    ('E6', (2, 5, 6, 8, 9, 12)),
    ('E8', (2, 8, 12, 14, 18, 20, 24, 30)),
    ('F4', (2, 6, 8, 12)),
    ('G2', (2, 6)),
    ('H3', (2, 6, 10)),
    ('H4', (2, 12, 20, 30)),
    ('I2(5)', (2, 5)),
])
def test_degrees(label, expected):
    assert degrees(label).degrees == expected


def test_positive_roots_and_coxeter_number():
    e8 = degrees('E8')
    assert e8.positive_root_count == 120
    assert e8.coxeter_number == 30
    assert degrees('A3').positive_root_count == 6


@pytest.mark.parametrize('label', ['', 'A0', 'D3', 'B1', 'E9', 'Z2', 'I2(2)', 'I3(5)', 'A(3)'])
def test_unknown_labels(label):
    with pytest.raises(UnknownCoxeterTypeError):
        degrees(label)


def test_unknown_label_is_value_error():
    with pytest.raises(ValueError):
        degrees('K7')


def test_crystallographic_flags():
    assert degrees('E7').is_crystallographic
    assert degrees('I2(6)').is_crystallographic
    assert not degrees('I2(5)').is_crystallographic
    assert degrees('H3').coverage == 'conjectural coverage'
    assert degrees('B2').coverage == 'proved'


def test_opdam_a2():
    assert opdam_bg(degrees('A2')) == FactoredBPoly([-1, '-5/6', '-7/6'])


def test_opdam_a1_is_smooth_point():
    assert opdam_bg(degrees('A1')) == FactoredBPoly([-1])


@pytest.mark.parametrize('label', supported_labels())
def test_every_type_has_witness_root(label):
    datum = degrees(label)
    assert has_witness_root(datum)
    assert datum.witness_root == -(Rational(1, 2) + Rational(1, datum.coxeter_number))


@pytest.mark.parametrize('label', supported_labels())
def test_opdam_degree(label):
    datum = degrees(label)
    assert opdam_bg(datum).degree == datum.positive_root_count


def test_braid_type_nd_root():
    datum = braid_type(4)
    assert datum.label == 'A3'
    assert datum.nd_root == Rational(-1, 2)
    assert nd_root_check(FactoredBPoly(['-1/2']), datum)
    assert not nd_root_check(FactoredBPoly([-1]), datum)
    with pytest.raises(ValueError):
        braid_type(1)


def test_budur_check_direction():
    bg = opdam_bg(degrees('A1'))
    assert budur_check(bg, FactoredBPoly([-1]))
    assert not budur_check(bg, FactoredBPoly(['-1/2']))


@pytest.mark.parametrize('label', supported_labels())
def test_opdam_roots_in_open_interval(label):
    assert all(-2 < r < 0 for r, _ in opdam_bg(degrees(label)))


def test_opdam_g2():
    expected = '(s + 2/3) (s + 5/6) (s + 1)^2 (s + 7/6) (s + 4/3)'
    assert str(opdam_bg(degrees('G2'))) == expected
