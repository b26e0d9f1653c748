import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def verification_report():
    from niljordan.paperchecks import run_verification

    return run_verification()
