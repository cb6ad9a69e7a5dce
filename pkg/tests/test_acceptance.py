"""End-to-end acceptance criteria.

Each test runs one self-contained criterion from chernatom.acceptance at its
stated tolerance and reports the diagnostic detail string on failure.  The
same checks back the `chernatom verify` subcommand.
"""

import pytest

from chernatom import acceptance


@pytest.mark.parametrize(
    "criterion", acceptance.CRITERIA, ids=lambda fn: fn.__name__
)
def test_criterion(criterion):
    result = criterion()
    assert result.passed, f"criterion {result.number} ({result.name}): {result.detail}"
