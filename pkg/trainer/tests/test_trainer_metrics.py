"""Positive-class F1 arithmetic."""

import pytest

from predictor_trainer.metrics import evaluate_f1


def test_perfect_predictions():
    m = evaluate_f1([1, 0, 1], [1, 0, 1])
    assert m["f1"] == 1.0 and m["precision"] == 1.0 and m["recall"] == 1.0
    assert m["positives"] == 2 and m["total"] == 3


def test_all_negative_with_positive_support():
    m = evaluate_f1([0, 0, 0], [1, 1, 0])
    assert m["f1"] == 0.0
    assert m["positives"] == 2


def test_hand_arithmetic():
    m = evaluate_f1([1, 1, 0, 0], [1, 0, 0, 0])
    assert m["precision"] == pytest.approx(0.5)
    assert m["recall"] == pytest.approx(1.0)
    assert m["f1"] == pytest.approx(2 / 3)
    assert m["positives"] == 1 and m["total"] == 4


def test_degenerate_no_positives_anywhere():
    m = evaluate_f1([0, 0], [0, 0])
    assert m["f1"] == 0.0 and m["precision"] == 0.0 and m["recall"] == 0.0
    assert m["positives"] == 0 and m["total"] == 2


def test_length_mismatch_rejected():
    with pytest.raises(ValueError, match="length mismatch"):
        evaluate_f1([1], [1, 0])


def test_bool_inputs_accepted():
    m = evaluate_f1([True, False], [True, True])
    assert m["recall"] == pytest.approx(0.5)
