import json
from fractions import Fraction

import pytest

import martial
from martial import Permutation

EGG = Permutation.parse("12463578")


def test_permutation_basics():
    assert EGG.length == 3
    assert str(EGG) == "124635"
    assert Permutation.parse("12463578", -2).length == 3
    assert (Permutation.simple(1) * Permutation.simple(1)).is_identity
    assert Permutation.from_word([3, 5, 4]) == EGG
    assert sorted(martial.reduced_words(EGG)) == [[3, 5, 4], [5, 3, 4]]
    assert [martial.comaj(w) for w in ([3, 5, 4], [5, 3, 4])] == [1, 2]
    assert hash(Permutation.parse("21")) == hash(Permutation.simple(1))


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        Permutation.parse("113")
    with pytest.raises(martial.ValidationError):
        martial.lr_coefficients([1, 2], [1])


def test_structure_constants():
    r2 = Permutation.simple(2)
    c = martial.structure_constants(r2, r2)
    assert c == {Permutation.parse("231"): Fraction(1), Permutation.parse("1423"): Fraction(1)}
    egg = martial.structure_constants(EGG, EGG)
    assert len(egg) == 7
    assert egg[Permutation.parse("13572468")] == 2


def test_coalgebra():
    assert martial.stanley_coefficients(Permutation.parse("321")) == {(2, 1): 1}
    assert martial.lr_coefficients([1], [1]) == {(2,): 1, (1, 1): 1}
    d = martial.coproduct(Permutation.parse("231"))
    assert d[(Permutation.simple(1), Permutation.simple(2))] == 1
    assert len(d) == 3


def test_genera():
    g = martial.affine_linear_genus(Permutation.parse("321"))
    assert g == "3/2 * a b^2 + 13/6 * a^2 b + 1 * a^3 + 1/3 * b^3"
    assert martial.exp_triangle(Permutation.parse("321")) == g
    numerator, denom = martial.q_klyachko_genus(EGG)
    assert denom == 3
    assert martial.component_evaluate(Permutation.simple(2), i=4, j=6) == "-2 * x"


def test_egg_table_and_rectification():
    csv = martial.distribution_table_csv(EGG, EGG, 6).splitlines()
    assert csv[1] == "total,1,3,5,8,11,12,12,11,8,5,3,1"
    assert sum(1 for line in csv if line.startswith("13572468,")) == 2
    d = martial.q_nenashev_distributions(EGG, EGG, 6)
    assert d["holds"]
    assert sum(d["lhs"].values()) == 80
    w = martial.rectification_witness(EGG, EGG, 6)
    assert w["perfect"] and len(w["matching"]) == 80


def test_verify_and_cli(tmp_path):
    names = [name for name, _ in martial.suites()]
    assert "triangle" in names and len(names) == 16
    report = martial.verify("triangle", max_length=4)
    assert report["passed"] and report["counterexample"] is None
    code, out, err = martial.run_cli(["--format", "json", "rw", "12463578"])
    assert code == 0 and json.loads(out)["length"] == 3
    assert martial.run_cli(["rw", "1x"])[0] == 2
    martial.save_caches(str(tmp_path))
    assert (tmp_path / "reduced_words.cache").exists()
    assert martial.load_caches(str(tmp_path)) > 0


def test_small_checks():
    assert martial.equidistribution_sn(5)
    assert martial.garsia_gessel_check([1, 4], [2])
