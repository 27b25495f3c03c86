"""F1 on the positive ("arrives again within W") class."""


def evaluate_f1(predictions, labels) -> dict:
    """Precision, recall, and F1 for the positive class, plus the positive
    support and total count. Degenerate denominators score 0.0."""
    if len(predictions) != len(labels):
        raise ValueError(
            f"length mismatch: {len(predictions)} predictions, {len(labels)} labels"
        )
    tp = fp = fn = 0
    for p, y in zip(predictions, labels):
        if p and y:
            tp += 1
        elif p:
            fp += 1
        elif y:
            fn += 1
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return {
        "f1": f1,
        "precision": precision,
        "recall": recall,
        "positives": tp + fn,
        "total": len(labels),
    }
