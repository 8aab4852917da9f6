import pytest

from comrade import dump_comrade


@pytest.fixture
def comrade_file(tmp_path):
    """Factory: write a ComradeMatrix to a temp JSON file, return the path."""

    def write(C, name="matrix.json"):
        path = tmp_path / name
        dump_comrade(C, path)
        return path

    return write
