"""Command line entry: train on a trace file, write the prediction file
for the whole trace and a JSON metrics report for the held-out test split.

    winfreq-trainer --trace t.txt --w 256 \
        --out-predictions preds.txt --out-metrics metrics.json
"""

import argparse

from .dataset import EMBEDDING_MODES, build_dataset
from .export import export_predictions, write_metrics_json
from .metrics import evaluate_f1
from .traces import read_trace
from .train import Hyperparams, predict_bits, train


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="winfreq-trainer",
        description="Train a next-arrival-within-window classifier and export "
        "a prediction file plus JSON metrics.",
    )
    parser.add_argument("--trace", required=True, help="input trace file")
    parser.add_argument("--format", default="lines", choices=("lines", "pairs"))
    parser.add_argument("--w", required=True, type=int, help="window size the labels use")
    parser.add_argument("--context", type=int, default=16, help="context length L")
    parser.add_argument("--split", type=float, default=0.7,
                        help="chronological train fraction")
    parser.add_argument("--embedding", default="endpoint", choices=EMBEDDING_MODES)
    parser.add_argument("--vocab-cap", type=int, default=100_000)
    parser.add_argument("--epochs", type=int, default=10)
    parser.add_argument("--batch", type=int, default=256)
    parser.add_argument("--hidden", type=int, default=32)
    parser.add_argument("--embed-dim", type=int, default=16)
    parser.add_argument("--lr", type=float, default=1e-3)
    parser.add_argument("--val-fraction", type=float, default=0.1)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out-predictions", required=True)
    parser.add_argument("--out-metrics", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    trace = read_trace(args.trace, args.format)
    dataset = build_dataset(
        trace,
        window=args.w,
        context_len=args.context,
        split=args.split,
        mode=args.embedding,
        vocab_cap=args.vocab_cap,
    )
    model = train(dataset, Hyperparams(
        epochs=args.epochs,
        batch_size=args.batch,
        hidden_size=args.hidden,
        embed_dim=args.embed_dim,
        lr=args.lr,
        val_fraction=args.val_fraction,
        seed=args.seed,
    ))
    test_bits = predict_bits(model.module, dataset.features[dataset.split_idx:])
    metrics = evaluate_f1(test_bits, dataset.test_labels)
    write_metrics_json(metrics, args.out_metrics)
    export_predictions(model, trace, args.w, args.out_predictions)
    print(
        f"test f1={metrics['f1']:.4f} precision={metrics['precision']:.4f} "
        f"recall={metrics['recall']:.4f} (best epoch {model.best_epoch}); "
        f"wrote {args.out_predictions} and {args.out_metrics}"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
