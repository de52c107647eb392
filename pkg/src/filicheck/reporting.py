"""Report assembly: JSON documents, delimited summaries and figures.

Every CLI invocation produces a single top-level report object with a
schema_version field; the same object renders to text, JSON, a CSV
summary and matplotlib figures.  All serialization is deterministic
for fixed inputs, flags and seed.
"""

from __future__ import annotations

import csv
import json
import os
from typing import Any

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from . import __version__
from .linalg import Matrix
from .scalars import Scalar, format_scalar

SCHEMA_VERSION = "1"


def jsonable(value: Any) -> Any:
    """Recursively convert exact values into JSON-friendly primitives."""
    if isinstance(value, Matrix):
        return [[format_scalar(x) for x in row] for row in value.rows]
    if isinstance(value, Scalar):
        return format_scalar(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "value") and value.__class__.__name__ in ("Status", "CertificateKind"):
        return value.value
    return value


def base_report(command: str, input_kind: str, input_name: str, seed: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "filicheck",
        "version": __version__,
        "command": command,
        "seed": seed,
        "input": {"kind": input_kind, "name": input_name},
        "results": {},
    }


def to_json(report: dict) -> str:
    return json.dumps(jsonable(report), indent=2, sort_keys=True) + "\n"


def _flatten(prefix: str, value: Any, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for k in sorted(value, key=str):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], rows)
    elif isinstance(value, (list, tuple)):
        rows.append((prefix, " ".join(str(v) for v in jsonable(value))))
    else:
        rows.append((prefix, str(jsonable(value))))


def write_csv(report: dict, path: str) -> None:
    rows: list[tuple[str, str]] = []
    _flatten("", report, rows)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["key", "value"])
        writer.writerows(rows)


def _fig_analyze(report: dict, outdir: str) -> list[str]:
    results = report["results"]
    fig, axes = plt.subplots(1, 2, figsize=(8, 3.2))
    dims = results.get("series_dims", [])
    axes[0].step(range(len(dims)), dims, where="post", marker="o")
    axes[0].set_xlabel("series index")
    axes[0].set_ylabel("dimension")
    axes[0].set_title("descending central series")
    seq = results.get("characteristic_sequence")
    if seq:
        axes[1].bar(range(1, len(seq) + 1), seq)
        axes[1].set_title("characteristic sequence")
    else:
        axes[1].set_title("characteristic sequence: n/a")
    axes[1].set_xlabel("part")
    fig.suptitle(f"{report['input']['name']} (dim {results.get('dim')})")
    fig.tight_layout()
    path = os.path.join(outdir, "analysis.png")
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return [path]


def _fig_search(report: dict, outdir: str) -> list[str]:
    paths = []
    results = report["results"]
    evidence = results.get("evidence") or {}
    if "residuals" not in evidence:
        evidence = results.get("corroboration") or {}
    residuals = evidence.get("residuals")
    if residuals:
        fig, ax = plt.subplots(figsize=(6, 3.2))
        ax.semilogy(range(len(residuals)), residuals, ".", markersize=4)
        ax.axhline(evidence.get("tol", 1e-9), color="red", linestyle="--", label="tol")
        ax.set_xlabel("restart")
        ax.set_ylabel("final residual")
        ax.set_title(f"residuals on {report['input']['name']}")
        ax.legend()
        fig.tight_layout()
        path = os.path.join(outdir, "residuals.png")
        fig.savefig(path, dpi=110)
        plt.close(fig)
        paths.append(path)
    witness = results.get("witness")
    if witness:
        values = [[_scalar_to_float(x) for x in row] for row in witness]
        fig, ax = plt.subplots(figsize=(4, 3.6))
        im = ax.imshow(values, cmap="RdBu")
        fig.colorbar(im, ax=ax, shrink=0.85)
        ax.set_title("witness endomorphism")
        fig.tight_layout()
        path = os.path.join(outdir, "witness.png")
        fig.savefig(path, dpi=110)
        plt.close(fig)
        paths.append(path)
    return paths


def _scalar_to_float(text: str) -> float:
    from .fileformat import parse_scalar

    s = parse_scalar(text)
    return float(s.re)


def _fig_catalog(report: dict, outdir: str) -> list[str]:
    entries = report["results"]["entries"]
    keys = [e["key"] for e in entries]
    ok = [1 if e["match"] else 0 for e in entries]
    fig, ax = plt.subplots(figsize=(7, 0.3 * len(keys) + 1.2))
    colors = ["tab:green" if v else "tab:red" for v in ok]
    ax.barh(range(len(keys)), [1] * len(keys), color=colors)
    ax.set_yticks(range(len(keys)))
    ax.set_yticklabels(keys, fontsize=7)
    ax.set_xticks([])
    ax.set_title("catalog recomputation")
    ax.invert_yaxis()
    fig.tight_layout()
    path = os.path.join(outdir, "catalog.png")
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return [path]


def write_report_dir(report: dict, outdir: str) -> list[str]:
    """CSV + JSON + figures for a report; returns the file paths written."""
    os.makedirs(outdir, exist_ok=True)
    paths = []
    csv_path = os.path.join(outdir, "report.csv")
    write_csv(report, csv_path)
    paths.append(csv_path)
    json_path = os.path.join(outdir, "report.json")
    with open(json_path, "w", encoding="utf-8") as fh:
        fh.write(to_json(report))
    paths.append(json_path)
    command = report["command"]
    if command == "analyze":
        paths.extend(_fig_analyze(report, outdir))
    elif command == "search":
        paths.extend(_fig_search(report, outdir))
    elif command == "verify-catalog":
        paths.extend(_fig_catalog(report, outdir))
    return paths
