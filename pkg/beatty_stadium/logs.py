"""
logs.py
=======

Logging utilities for **beatty-stadium**.

This module manages:
- Console status lines (``[info]``, ``[warn]``, ``[ok]``) on stderr, so that
  CLI stdout carries nothing but JSON.
- Persistent run logs (`run_log.json`) storing metadata about each CLI
  command or battery run.
- Error logs (`errors.log`) with stack traces.

Contents
--------
- info / warn / ok: tagged console status lines (plus summary).
- append_run_log: record metadata about a run (command, parameters, outcome).
- log_error: record exceptions and stack traces in a log file.
- get_last_run: retrieve the last recorded run.

Typical Usage
-------------
>>> from beatty_stadium import logs
>>> logs.append_run_log("logs", "battery", {"scale": "quick"}, status="ok", seconds=12.5)
>>> logs.log_error("logs", Exception("Something went wrong"))
>>> logs.get_last_run("logs")["command"]
'battery'
"""

import json
import sys
import traceback
from datetime import datetime, timezone
from pathlib import Path


def _say(tag, msg):
    print(f"[{tag}] {msg}", file=sys.stderr)


def info(msg):
    _say("info", msg)


def warn(msg):
    _say("warn", msg)


def ok(msg):
    _say("ok", msg)


def summary(msg):
    _say("summary", msg)


def append_run_log(logdir, command, params, status="ok", error_msg=None, seconds=None):
    """
    Append an entry to the run log (`run_log.json`).

    Parameters
    ----------
    logdir : str or Path
        Directory where the log files are stored.
    command : str
        CLI verb (or ``battery``).
    params : dict
        JSON-serializable parameters of the run.
    status : str, optional
        Outcome string (default="ok").
    error_msg : str, optional
        Error message if the run failed.
    seconds : float, optional
        Wall-clock duration.
    """
    logdir = Path(logdir)
    logdir.mkdir(parents=True, exist_ok=True)
    logfile = logdir / "run_log.json"

    if logfile.exists():
        with open(logfile, "r", encoding="utf-8") as f:
            log = json.load(f)
    else:
        log = []

    entry = {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "command": command,
        "params": params,
        "status": status,
    }
    if seconds is not None:
        entry["seconds"] = round(seconds, 3)
    if error_msg:
        entry["error"] = error_msg

    log.append(entry)

    with open(logfile, "w", encoding="utf-8") as f:
        json.dump(log, f, indent=2)


def log_error(logdir, exc: Exception):
    """
    Append an error entry with stack trace to `errors.log`.

    Parameters
    ----------
    logdir : str or Path
        Directory where the error log is stored.
    exc : Exception
        Exception object to log.
    """
    logdir = Path(logdir)
    logdir.mkdir(parents=True, exist_ok=True)
    errfile = logdir / "errors.log"

    with open(errfile, "a", encoding="utf-8") as f:
        f.write("=" * 60 + "\n")
        f.write(f"[{datetime.now(timezone.utc).isoformat()}] ERROR: {type(exc).__name__}\n")
        f.write("".join(traceback.format_exception(type(exc), exc, exc.__traceback__)))
        f.write("\n")


def get_last_run(logdir):
    """Most recent `run_log.json` entry, or None."""
    logfile = Path(logdir) / "run_log.json"
    if not logfile.exists():
        return None
    with open(logfile, "r", encoding="utf-8") as f:
        log = json.load(f)
    return log[-1] if log else None
