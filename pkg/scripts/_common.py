"""Helpers shared by the figure scripts."""
import argparse
import sys
from pathlib import Path

from critsqueeze.cli import main as cli


def parser(doc: str, default_out: str) -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(description=doc)
    ap.add_argument("--outdir", default=default_out, help="where CSV files go")
    return ap


def run(argv) -> None:
    rc = cli([str(a) for a in argv])
    if rc:
        sys.exit(rc)


def outdir(path) -> Path:
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p
