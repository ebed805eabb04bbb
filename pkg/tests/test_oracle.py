from fractions import Fraction

import pytest

from secantplanes import oracle
from secantplanes.closed_forms import nd_acgh
from secantplanes.oracle import GmPolynomial, IntersectionTerm

# polynomials frozen after the three reduction routes agreed
FROZEN = {
    1: "m",
    2: "m^2 - 3m - γ",
    3: "m^3 - 9m^2 - 3mγ + 20m + 12γ",
    4: "m^4 - 18m^3 - 6m^2γ + 107m^2 + 66mγ + 3γ^2 - 210m - 174γ",
    5: "m^5 - 30m^4 - 10m^3γ + 335m^3 + 210m^2γ + 15mγ^2 - 1650m^2 - 1430mγ - 120γ^2 + 3024m + 3120γ",
}


def test_gm_polynomial_arithmetic():
    m, g = GmPolynomial.m(), GmPolynomial.gamma()
    p = m * m - 3 * m - g
    assert str(p) == "m^2 - 3m - γ"
    assert p.evaluate(6, 3) == 14
    assert (p - p) == 0
    assert 0 + p == p
    assert (p / 2).coefficient(2, 0) == Fraction(1, 2)
    assert str(GmPolynomial()) == "0"


def test_chern_classes_small():
    (c1,) = oracle.chern_classes(1)
    assert [str(t) for t in c1] == ["1*l1"]
    c1, c2 = oracle.chern_classes(2)
    assert sorted(str(t) for t in c1) == ["-1*D12", "1*l1", "1*l2"]
    assert sorted(str(t) for t in c2) == ["-1*D12*l1", "1*l1*l2"]


def test_chern_class_c3_contains_full_product():
    c3 = oracle.chern_classes(3)[2]
    # l1 (l2 - D12)(l3 - D13 - D23) expands to six monomials
    assert len(c3) == 6
    assert all(t.degree == 3 for t in c3)


def test_term_evaluation():
    assert IntersectionTerm(1, (), (1, 2)).evaluate(2) == GmPolynomial.m() * GmPolynomial.m()
    assert IntersectionTerm(1, (((1, 2), 1),), (1,)).evaluate(2) == GmPolynomial.m()
    assert IntersectionTerm(1, (((1, 2), 2),), ()).evaluate(2) == -GmPolynomial.gamma()
    assert IntersectionTerm(1, (((1, 2), 3),), ()).evaluate(3) == 0
    assert IntersectionTerm(1, (), (1, 1)).evaluate(2) == 0
    assert IntersectionTerm(1, (), (1,)).evaluate(2) == 0


@pytest.mark.parametrize("d", sorted(FROZEN))
def test_porteous_frozen(d):
    assert str(oracle.porteous_degree(d)) == FROZEN[d]


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_routes_agree(d):
    values = {r: oracle.porteous_degree(d, route=r) for r in ("determinant", "complete_homogeneous", "literal")}
    assert len(set(values.values())) == 1


def test_nd_oracle_examples():
    assert oracle.nd_oracle(2, 0, 4) == 3
    assert oracle.nd_oracle(3, 0, 4) == 0
    assert oracle.nd_oracle(2, 3, 6) == 7


def test_leading_coefficient():
    for d in range(1, 6):
        p = oracle.porteous_degree(d)
        assert p.coefficient(d, 0) == 1
        assert p.degree() == d


def test_lemma_coefficients():
    assert oracle.lemma_coefficients(2) == (3, 1)
    assert oracle.lemma_coefficients(3) == (20, 12)
    assert oracle.lemma_coefficients(4) == (210, 174)
    for d in range(2, 6):
        assert oracle.lemma_report(d)["ok"]


def test_exponential_formula():
    assert oracle.exponential_formula_check(5) == []


def test_cap(monkeypatch):
    with pytest.raises(ValueError, match="cap"):
        oracle.porteous_degree(oracle.oracle_cap() + 1)
    monkeypatch.setenv("SECANT_ORACLE_CAP", "7")
    assert oracle.oracle_cap() == 7
    with pytest.raises(ValueError):
        oracle.porteous_degree(0)


def test_oracle_grid():
    for d in range(1, 5):
        for g in range(7):
            for m in range(1, 13):
                assert oracle.nd_oracle(d, g, m) == nd_acgh(d, g, m)


@pytest.mark.slow
def test_oracle_degree_six():
    for g, m in [(0, 10), (3, 12), (6, 11), (2, 7)]:
        assert oracle.nd_oracle(6, g, m) == nd_acgh(6, g, m)
    assert oracle.lemma_report(6)["ok"]
