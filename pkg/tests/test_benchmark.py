import subprocess
import sys
from pathlib import Path

SCRIPT = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"


def test_benchmark_script_runs():
    proc = subprocess.run(
        [sys.executable, str(SCRIPT), "--n-min", "2", "--n-max", "4", "--repeat", "1"],
        capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0, proc.stderr
    assert "phi_inverse" in proc.stdout
