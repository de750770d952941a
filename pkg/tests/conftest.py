import random

import pytest

from asm3.cli import main


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def run_cli(capsys):
    """Run the asm3 command line, returning (exit status, stdout)"""

    def run(*argv):
        try:
            code = main(list(argv))
        except SystemExit as e:
            code = e.code
        return code, capsys.readouterr().out

    return run
