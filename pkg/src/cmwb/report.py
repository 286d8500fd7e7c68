"""Report assembly: canonical JSON, delimited summaries, and figures.

JSON output is canonical (sorted keys, fixed separators, trailing newline)
and contains no timestamps or timing data unless timings are explicitly
requested, so repeated runs on the same input are byte-identical.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json

SCHEMA_VERSION = "1.0"
TOOL_NAME = "cmwb"
TOOL_VERSION = "0.1.0"

PASS = "pass"
FAIL = "fail"
UNDETERMINED = "undetermined"


def input_digest(data):
    return hashlib.sha256(data).hexdigest()


def build_report(command, input_path, input_bytes, options, checks,
                 timings=None):
    summary = {
        "pass": sum(1 for c in checks if c["status"] == PASS),
        "fail": sum(1 for c in checks if c["status"] == FAIL),
        "undetermined": sum(1 for c in checks if c["status"] == UNDETERMINED),
    }
    report = {
        "tool": {"name": TOOL_NAME, "version": TOOL_VERSION,
                 "schema": SCHEMA_VERSION},
        "command": command,
        "input": {"path": input_path, "sha256": input_digest(input_bytes)},
        "options": options,
        "checks": checks,
        "summary": summary,
    }
    if timings is not None:
        report["timings"] = timings
    return report


def report_json(report):
    return json.dumps(report, sort_keys=True, indent=2,
                      separators=(",", ": "), default=_default) + "\n"


def _default(obj):
    if obj == float("inf"):
        return "inf"
    if obj == float("-inf"):
        return "-inf"
    raise TypeError("not JSON serializable: %r" % (obj,))


def report_csv(report):
    """Delimited one-row-per-check summary."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["command", "check", "status", "detail"])
    for c in report["checks"]:
        detail = c.get("detail", "")
        if not isinstance(detail, str):
            detail = json.dumps(detail, sort_keys=True, default=_default)
        writer.writerow([report["command"], c["name"], c["status"], detail])
    return buf.getvalue()


_STATUS_COLORS = {PASS: "#2a9d3a", FAIL: "#c1362b", UNDETERMINED: "#e0a020"}


def render_figure(report, path):
    """Per-check status chart written next to the delimited output."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    checks = report["checks"]
    names = [c["name"] for c in checks] or ["(no checks)"]
    statuses = [c["status"] for c in checks] or [UNDETERMINED]
    colors = [_STATUS_COLORS.get(s, "#888888") for s in statuses]
    height = max(2.0, 0.4 * len(names) + 1.2)
    fig, ax = plt.subplots(figsize=(8, height))
    ypos = range(len(names))
    ax.barh(list(ypos), [1] * len(names), color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xticks([])
    ax.set_xlim(0, 1.35)
    for y, s in zip(ypos, statuses):
        ax.text(1.02, y, s, va="center", fontsize=8)
    summary = report["summary"]
    ax.set_title("%s %s: %d pass / %d fail / %d undetermined"
                 % (report["tool"]["name"], report["command"],
                    summary["pass"], summary["fail"], summary["undetermined"]),
                 fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
