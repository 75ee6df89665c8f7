"""Rendering: human tables, delimited output, JSON, and figure files.

Human tables print at 4 decimal places; machine output (CSV, JSON) keeps full
float precision via repr round-tripping.  CSV is byte-stable: header row,
comma separators, dot decimals, LF endings, UTF-8.  Figures are optional and
rendered with matplotlib's Agg backend only when requested.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import List, Sequence

from .magdm import EvaluationReport


def fmt(x: float, places: int = 4) -> str:
    return f"{x:.{places}f}"


def _pad_table(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
                     for r in rows)


def report_text(report: EvaluationReport) -> str:
    """Human-readable evaluation report."""
    lines = []
    lines.append(f"rung q = {report.q:g}   family = {report.family}   "
                 f"weights = {report.weight_method}")
    if report.weight_params:
        params = ", ".join(f"{k}={v:g}" for k, v in sorted(report.weight_params.items()))
        lines.append(f"weight parameters: {params}")
    lines.append("")
    lines.append("aggregated matrix (mu_lo, mu_hi, nu_lo, nu_hi):")
    head = [""] + list(report.attributes)
    rows = [head]
    for label, row in zip(report.alternatives, report.aggregated):
        rows.append([label] + [
            "(" + ", ".join(fmt(v) for v in c.as_tuple()) + ")" for c in row])
    lines.append(_pad_table(rows))
    lines.append("")
    lines.append("attribute weights: (" +
                 ", ".join(fmt(w) for w in report.attribute_weights) + ")")
    lines.append("")
    rows = [["alternative", "aggregate", "score", "norm_score", "accuracy"]]
    for label, agg, s, ns, h in zip(report.alternatives, report.aggregates,
                                    report.raw_scores, report.norm_scores,
                                    report.accuracies):
        rows.append([label,
                     "(" + ", ".join(fmt(v) for v in agg.as_tuple()) + ")",
                     fmt(s), fmt(ns), fmt(h)])
    lines.append(_pad_table(rows))
    lines.append("")
    lines.append("ranking: " + report.ranking_string())
    for group in report.ties:
        labels = [report.alternatives[i] for i in group]
        lines.append("tie: " + " = ".join(labels))
    if report.diagnostics:
        lines.append("")
        lines.append("diagnostics:")
        for d in report.diagnostics:
            lines.append("  - " + d)
    return "\n".join(lines) + "\n"


def write_json(path: Path, payload: dict) -> None:
    text = json.dumps(payload, sort_keys=True, indent=1)
    Path(path).write_text(text + "\n", encoding="utf-8", newline="\n")


def write_csv(path: Path, header: Sequence[str], rows: Sequence[Sequence]) -> None:
    def cell(v) -> str:
        if isinstance(v, float):
            return repr(v)
        return str(v)
    out = [",".join(header)]
    out.extend(",".join(cell(v) for v in row) for row in rows)
    Path(path).write_text("\n".join(out) + "\n", encoding="utf-8", newline="\n")


def report_csv_rows(report: EvaluationReport):
    """Per-alternative summary rows used by `evaluate --emit-csv`."""
    header = ["alternative", "mu_lo", "mu_hi", "nu_lo", "nu_hi",
              "raw_score", "norm_score", "accuracy", "rank"]
    position = {idx: pos + 1 for pos, idx in enumerate(report.ranking)}
    rows = []
    for i, label in enumerate(report.alternatives):
        rows.append([label, *report.aggregates[i].as_tuple(),
                     report.raw_scores[i], report.norm_scores[i],
                     report.accuracies[i], position[i]])
    return header, rows


SWEEP_HEADER_FIXED = ["q", "family", "weight_method", "ranking",
                      "score_spread", "hhi"]


def sweep_csv(path: Path, alternatives: Sequence[str], rows: List[dict]) -> None:
    header = SWEEP_HEADER_FIXED[:3] + [f"score_{a}" for a in alternatives] \
        + SWEEP_HEADER_FIXED[3:]
    out = []
    for r in rows:
        out.append([r["q"], r["family"], r["weight_method"],
                    *r["scores"], r["ranking"], r["spread"], r["hhi"]])
    write_csv(path, header, out)


def sweep_text(alternatives: Sequence[str], rows: List[dict]) -> str:
    table = [["q", "family", "weights"] + [f"s({a})" for a in alternatives]
             + ["ranking", "spread", "hhi"]]
    for r in rows:
        table.append([str(r["q"]), r["family"], r["weight_method"],
                      *[fmt(s) for s in r["scores"]],
                      r["ranking"], fmt(r["spread"]), fmt(r["hhi"])])
    return _pad_table(table) + "\n"


def compare_weights_text(attributes: Sequence[str], entries: List[dict]) -> str:
    table = [["method"] + [f"w({c})" for c in attributes] + ["ranking", "hhi", "params"]]
    for e in entries:
        params = ", ".join(f"{k}={v:g}" for k, v in sorted(e["params"].items())) or "-"
        table.append([e["method"], *[fmt(w) for w in e["weights"]],
                      e["ranking"], fmt(e["hhi"]), params])
    return _pad_table(table) + "\n"


def compare_weights_csv(path: Path, attributes: Sequence[str],
                        entries: List[dict]) -> None:
    header = ["method"] + [f"w_{c}" for c in attributes] + ["ranking", "hhi"]
    rows = [[e["method"], *e["weights"], e["ranking"], e["hhi"]] for e in entries]
    write_csv(path, header, rows)


# ---------------------------------------------------------------------------
# Figures
# ---------------------------------------------------------------------------

def render_sweep_figures(plot_dir: Path, alternatives: Sequence[str],
                         rows: List[dict]) -> List[Path]:
    """Render score, spread, and concentration figures from sweep rows.

    One PNG per figure; returns the written paths.  Rows must share one
    weight method per family for the score/spread panels; the concentration
    panel uses every (weight method) series of the first family.
    """
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plot_dir = Path(plot_dir)
    plot_dir.mkdir(parents=True, exist_ok=True)
    written = []

    families = sorted({r["family"] for r in rows})
    methods = sorted({r["weight_method"] for r in rows})
    base_method = methods[0]

    # scores vs q, one panel per family, one line per alternative
    fam_rows = {f: sorted([r for r in rows if r["family"] == f
                           and r["weight_method"] == base_method],
                          key=lambda r: r["q"]) for f in families}
    fig, axes = plt.subplots(1, len(families), figsize=(4 * len(families), 3.2),
                             sharey=True, squeeze=False)
    for ax, f in zip(axes[0], families):
        qs = [r["q"] for r in fam_rows[f]]
        for i, a in enumerate(alternatives):
            ax.plot(qs, [r["scores"][i] for r in fam_rows[f]], marker="o",
                    label=a)
        ax.set_title(f)
        ax.set_xlabel("q")
    axes[0][0].set_ylabel("normalized score")
    axes[0][-1].legend(fontsize=8)
    fig.tight_layout()
    p = plot_dir / "scores_by_rung.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    written.append(p)

    # spread vs q per family
    fig, ax = plt.subplots(figsize=(5, 3.2))
    for f in families:
        qs = [r["q"] for r in fam_rows[f]]
        ax.plot(qs, [r["spread"] for r in fam_rows[f]], marker="o", label=f)
    ax.set_xlabel("q")
    ax.set_ylabel("score spread")
    ax.legend(fontsize=8)
    fig.tight_layout()
    p = plot_dir / "spread_by_rung.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    written.append(p)

    # concentration vs q per weight method (first family), with differences
    if len(methods) > 1:
        f0 = families[0]
        meth_rows = {m: sorted([r for r in rows if r["family"] == f0
                                and r["weight_method"] == m],
                               key=lambda r: r["q"]) for m in methods}
        qs = [r["q"] for r in meth_rows[methods[0]]]
        fig, ax = plt.subplots(figsize=(5.5, 3.4))
        width = 0.8 / len(methods)
        for k, m in enumerate(methods):
            xs = [qq + (k - len(methods) / 2 + 0.5) * width for qq in qs]
            ax.bar(xs, [r["hhi"] for r in meth_rows[m]], width=width, label=m)
        ax.set_xlabel("q")
        ax.set_ylabel("score concentration (HHI)")
        ax.set_ylim(bottom=min(r["hhi"] for m in methods for r in meth_rows[m]) - 1e-4)
        if {"swing", "mabac", "projection"} <= set(methods):
            ax2 = ax.twinx()
            d_sm = [(a["hhi"] - b["hhi"]) * 1000 for a, b in
                    zip(meth_rows["swing"], meth_rows["mabac"])]
            d_pm = [(a["hhi"] - b["hhi"]) * 1000 for a, b in
                    zip(meth_rows["projection"], meth_rows["mabac"])]
            ax2.plot(qs, d_sm, "k-o", label="(swing - mabac) x 1000")
            ax2.plot(qs, d_pm, "k--s", label="(projection - mabac) x 1000")
            ax2.axhline(0.0, color="gray", lw=0.8)
            ax2.set_ylabel("HHI difference x 1000")
            ax2.legend(fontsize=7, loc="upper right")
        ax.legend(fontsize=8, loc="upper left")
        fig.tight_layout()
        p = plot_dir / "concentration_by_rung.png"
        fig.savefig(p, dpi=150)
        plt.close(fig)
        written.append(p)

    return written
