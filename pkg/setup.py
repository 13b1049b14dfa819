#!/usr/bin/env python3
"""
Bootstrap for the Clifford subalgebra classifier: installs requirements,
seeds .env and logs/, then runs the product-table check as a smoke test
"""
import argparse
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent
SMOKE_CHECK = ["run.py", "table", "--n", "3", "--check-paper"]
FOLLOW_UPS = (
    (["run.py", "classify", "--n", "3"], "classify g(3)"),
    (["main.py"], "full reproduction run"),
    (["-m", "pytest"], "test suite"),
)


def install_requirements():
    print("Installing requirements.txt ...")
    subprocess.check_call([sys.executable, "-m", "pip", "install", "-r", str(ROOT / "requirements.txt")])


def seed_env() -> str:
    env_file, env_example = ROOT / ".env", ROOT / ".env.example"
    if env_file.exists():
        return ".env kept"
    env_file.write_text(env_example.read_text())
    return ".env written from .env.example"


def smoke_check() -> int:
    result = subprocess.run(
        [sys.executable, *SMOKE_CHECK], cwd=ROOT, capture_output=True, text=True
    )
    print(f"{' '.join(SMOKE_CHECK)}: {result.stdout.strip() or result.stderr.strip()}")
    return result.returncode


def main() -> int:
    parser = argparse.ArgumentParser(description="Set up the Clifford subalgebra classifier")
    parser.add_argument("--skip-install", action="store_true", help="Do not run pip")
    args = parser.parse_args()

    if sys.version_info < (3, 9):
        print(f"Python 3.9+ is required, found {sys.version.split()[0]}")
        return 1
    if not args.skip_install:
        install_requirements()
    print(seed_env())
    (ROOT / "logs").mkdir(exist_ok=True)

    status = smoke_check()
    if status:
        print(f"Smoke check failed with exit status {status}")
        return status

    print("Ready. Next:")
    for command, purpose in FOLLOW_UPS:
        print(f"  {Path(sys.executable).name} {' '.join(command)}    # {purpose}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
