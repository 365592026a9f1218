"""
Golden file recording and replay for command-line output.

A golden file stores the arguments of one ``blaschke-pick`` invocation and
the exit code and the exact bytes it wrote to stdout. With
``RECORD_GOLDENS=true`` the current output is saved; otherwise it is compared
byte for byte against the stored copy, which must already exist.
"""
import json
import os
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional

GOLDENS_DIR = Path(__file__).parent


def _record_requested() -> bool:
    return os.getenv("RECORD_GOLDENS", "").strip().lower() in {"1", "true", "yes"}


class GoldenRecorder:
    """Records and replays the output of one command."""

    def __init__(self, test_name: str, command: str):
        self.test_name = test_name
        self.command = command
        self.golden_path = GOLDENS_DIR / command / f"{test_name}.json"
        self.input: Dict[str, Any] = {}
        self.golden_output: Dict[str, Any] = {}

    @property
    def record_mode(self) -> bool:
        return _record_requested()

    @property
    def has_golden(self) -> bool:
        return self.golden_path.exists()

    def set_input(self, argv: List[str], **extra: Any) -> None:
        """Arguments as given to ``main``; paths should be repo-relative."""
        self.input = {"argv": list(argv), **extra}

    def set_golden_output(self, exit_code: int, stdout: str) -> None:
        self.golden_output = {"exit_code": exit_code, "stdout": stdout}

    def save_golden(self) -> Path:
        """Write the golden file and return its path."""
        self.golden_path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "test_name": self.test_name,
            "input": self.input,
            "golden_output": self.golden_output,
            "recorded_at": datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
        }
        with open(self.golden_path, "w") as f:
            json.dump(payload, f, indent=2, sort_keys=True)
            f.write("\n")
        return self.golden_path

    def load_golden(self) -> Dict[str, Any]:
        with open(self.golden_path, "r") as f:
            return json.load(f)

    def check(self, exit_code: int, stdout: str) -> Optional[Path]:
        """Record in record mode, otherwise assert the output matches.

        Returns:
            Path of the written file in record mode, else None
        """
        self.set_golden_output(exit_code, stdout)
        if self.record_mode:
            return self.save_golden()
        stored = self.load_golden()
        assert stored["input"] == self.input, f"golden input changed for {self.test_name}"
        assert stored["golden_output"]["exit_code"] == exit_code
        assert stored["golden_output"]["stdout"] == stdout, f"output differs from {self.golden_path}"
        return None
