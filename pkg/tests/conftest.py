import pytest
from hypothesis import strategies as st

from mgu import Arrow, TypeVar, Var
from mgu.cli import main as cli_main

names = st.from_regex(r"[A-Za-z][A-Za-z0-9_]{0,4}", fullmatch=True)
type_vars = st.builds(TypeVar, names)
type_terms = st.recursive(
    st.builds(Var, type_vars),
    lambda inner: st.builds(Arrow, inner, inner),
    max_leaves=16,
)


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process, returning (exit_code, stdout, stderr)."""

    def run(argv):
        try:
            code = cli_main(list(argv))
        except SystemExit as exc:  # argparse usage errors
            code = exc.code if isinstance(exc.code, int) else 2
        out, err = capsys.readouterr()
        return code, out, err

    return run
