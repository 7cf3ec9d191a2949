import csv
import importlib.util
import sys
from pathlib import Path

SCRIPT = Path(__file__).resolve().parents[1] / "scripts" / "sweep.py"


def load():
    spec = importlib.util.spec_from_file_location("sweep", SCRIPT)
    mod = importlib.util.module_from_spec(spec)
    sys.modules["sweep"] = mod  # dataclasses resolve annotations through it
    spec.loader.exec_module(mod)
    return mod


def test_sweep_script(tmp_path, capsys):
    sweep = load()
    out = tmp_path / "rows.csv"
    assert sweep.main(["--max-n", "50", "--csv", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 50 - 1 - 6
    row19 = next(r for r in rows if r["N"] == "19")
    assert row19["period_length"] == "6" and row19["species"] == "7"
    assert row19["pell_residue"] == "1"
    assert "engine disagreements: none" in capsys.readouterr().out
