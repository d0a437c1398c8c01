import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from rhl.errors import TheoremViolation  # noqa: E402

# Count every TheoremViolation raised anywhere during the run; the session
# fails if the count is nonzero even when the raising test caught it.
VIOLATIONS: list[str] = []
_orig_init = TheoremViolation.__init__


def _counting_init(self, message, coloring=None, obstruction=None):
    VIOLATIONS.append(message)
    _orig_init(self, message, coloring=coloring, obstruction=obstruction)


TheoremViolation.__init__ = _counting_init


def pytest_sessionfinish(session, exitstatus):
    if VIOLATIONS:
        print(f"\nTheoremViolation raised {len(VIOLATIONS)} time(s): {VIOLATIONS[:3]}")
        session.exitstatus = 1
