"""
exporters.py
============

Output/export utilities for **beatty-stadium**.

Export Targets
--------------
- **JSONL**    → one `RecordEvent` per line (stadium traces).
- **CSV**      → domain occupancy and recorded values per integer time,
    built as a pandas DataFrame for plotting scripts.
- **JSON**     → `battery.json`, the machine-readable battery outcome.
- **Markdown** → `battery.md`, a human-readable report rendered with jinja2.

Typical Usage
-------------
>>> from beatty_stadium.exporters import export_trace_jsonl, export_battery_report
>>> export_trace_jsonl(events, "trace.jsonl")
>>> export_battery_report(results, outdir="output")
"""

import json
from datetime import datetime, timezone
from pathlib import Path

import pandas as pd
from jinja2 import Template

from . import logs
from .stadium import domain_occupancy, records_by_athlete, simulate_two


# ---------------------------
# Stadium traces
# ---------------------------
def export_trace_jsonl(events, path):
    """Write one JSON object per RecordEvent; returns the path written."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for e in events:
            f.write(json.dumps(e.to_dict()) + "\n")
    logs.ok(f"Trace written → {path}")
    return path


def occupancy_frame(config, lo, hi):
    """
    Occupancy of the domains and recorded values for ``k`` in ``[lo, hi)``.

    Columns
    -------
    k, in_A, in_B : occupancy at integer time k
    records_x, records_y : how many values X and Y record in ``[k, k+1)``
    """
    events = simulate_two(config, lo, hi)
    by_athlete = records_by_athlete(events)
    xs = pd.Series(by_athlete.get("X", []), dtype="int64").value_counts()
    ys = pd.Series(by_athlete.get("Y", []), dtype="int64").value_counts()

    rows = []
    for k in range(lo, hi):
        in_a, in_b = domain_occupancy(config, k)
        rows.append({"k": k, "in_A": in_a, "in_B": in_b})
    df = pd.DataFrame(rows, columns=["k", "in_A", "in_B"])
    df["records_x"] = df["k"].map(xs).fillna(0).astype(int)
    df["records_y"] = df["k"].map(ys).fillna(0).astype(int)
    return df


def export_occupancy_csv(config, lo, hi, path):
    """Write `occupancy_frame` to CSV; returns the DataFrame."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df = occupancy_frame(config, lo, hi)
    df.to_csv(path, index=False)
    logs.ok(f"Occupancy CSV ({len(df)} rows) written → {path}")
    return df


# ---------------------------
# Battery outputs
# ---------------------------
def export_battery_json(results, outdir, meta=None):
    """
    Write `battery.json` with run metadata and every CheckResult.

    Output file
    -----------
    - `<outdir>/battery.json`
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    payload = {
        "generated": datetime.now(timezone.utc).isoformat(),
        "meta": meta or {},
        "passed": all(r.passed for r in results),
        "checks": [r.to_dict() for r in results],
    }
    fname = outdir / "battery.json"
    with open(fname, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, ensure_ascii=False)
    logs.ok(f"Battery JSON written → {fname}")
    return fname


REPORT_TEMPLATE = Template(
    """# Verification battery

Scale: `{{ meta.scale }}`, seed: `{{ meta.seed }}`, generated {{ generated }}.

**{{ passed_count }}/{{ results | length }} checks passed.**

| Check | Result | Cases | Seconds |
|---|---|---|---|
{% for r in results -%}
| {{ r.name }} | {{ "pass" if r.passed else "FAIL" }} | {{ r.cases }} | {{ "%.2f" | format(r.seconds) }} |
{% endfor %}
{% for r in results if r.failures or r.notes %}
## {{ r.name }}
{% for f in r.failures %}
- failure: {{ f }}
{%- endfor %}
{% for n in r.notes %}
- {{ n }}
{%- endfor %}
{% endfor %}
"""
)


def export_battery_report(results, outdir, meta=None):
    """
    Render the Markdown report `battery.md`.

    Output file
    -----------
    - `<outdir>/battery.md`
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    text = REPORT_TEMPLATE.render(
        results=results,
        meta=meta or {"scale": "?", "seed": "?"},
        generated=datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M UTC"),
        passed_count=sum(r.passed for r in results),
    )
    fname = outdir / "battery.md"
    fname.write_text(text, encoding="utf-8")
    logs.ok(f"Battery report written → {fname}")
    return fname
