import pytest


def _ratio_rows(pairs):
    """Render (n, b) pairs as consistent ratio CSV lines, header included."""
    lines = ["n,b_n,r2,r3,r4,r5"]
    for n, b in pairs:
        ratios = [repr(b / n ** (1.0 / k)) for k in (2, 3, 4, 5)]
        lines.append(",".join([str(n), str(b), *ratios]))
    return "\n".join(lines) + "\n"


@pytest.fixture
def ratio_text():
    return _ratio_rows


@pytest.fixture
def write_table(tmp_path):
    def _write(pairs, name="ratio.csv"):
        path = tmp_path / name
        path.write_text(_ratio_rows(pairs), encoding="utf-8")
        return path

    return _write
