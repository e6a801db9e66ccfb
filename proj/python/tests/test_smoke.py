import pytest

import tensoradj


def fusion_rules(doc):
    rank = len(doc["simples"])
    n = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    for a, b, c, mult in doc["N"]:
        n[a][b][c] = mult
    return n


def test_catalog_lists_regular_modules():
    cats = tensoradj.categories()
    assert {"fib", "vecz2", "vecs3"} <= set(cats)
    for c in cats:
        assert "regular" in tensoradj.modules(c)


@pytest.mark.parametrize("category", ["vecz2", "vecz3", "vecz2xz2", "fib"])
def test_carrier_is_sum_of_a_tensor_dual(category):
    doc = tensoradj.export(category)
    n = fusion_rules(doc)
    rank = len(doc["simples"])
    expected = [sum(n[a][doc["dual"][a]][k] for a in range(rank)) for k in range(rank)]
    assert tensoradj.carrier(category) == expected


def test_exported_documents_validate():
    assert tensoradj.validate(tensoradj.export("vecz3"))["ok"]
    report = tensoradj.validate(tensoradj.export("vecs3", "cosets-a3"))
    assert report["ok"] and report["kind"] == "module"


def test_perturbed_associator_is_rejected():
    doc = tensoradj.export("vecz3")
    doc["F"] = [{"abcd": [1, 1, 1, 0], "matrix": [[2]]}]
    report = tensoradj.validate(doc)
    assert not report["ok"] and report["violations"]


def test_input_errors_are_distinguished():
    with pytest.raises(tensoradj.InputError):
        tensoradj.carrier("no-such-category")
    with pytest.raises(tensoradj.InputError):
        tensoradj.validate({"format": "something-else"})
    with pytest.raises(tensoradj.InputError):
        tensoradj.run_suite("no-such-suite")
    assert issubclass(tensoradj.InputError, tensoradj.Error)


def test_comparison_certificates_hold():
    for category in ["vecz2", "fib"]:
        r = tensoradj.compare(category)
        assert r["ok"], r


def test_class_function_dim_matches_rank_for_regular_module():
    # The adjoint algebra of the regular module is induced from the unit, so its
    # endomorphisms in the center are Hom(sum a a*, 1), one per simple.
    for category in ["vecz2", "vecz3", "fib"]:
        assert tensoradj.class_function_dim(category) == len(tensoradj.simples(category))


def test_suites_pass_and_catch_negative_controls():
    for perturb in (False, True):
        reports = tensoradj.run_suite("duals", perturb=perturb)
        assert len(reports) == 1
        assert reports[0]["ok"] and reports[0]["perturbed"] == perturb
        assert all(row["pass"] for row in reports[0]["rows"])


def test_suite_output_is_deterministic():
    assert tensoradj.run_suite("rescaling", seed=7) == tensoradj.run_suite("rescaling", seed=7)
