import io

import pytest

from wirelength.dao.benchmarks import BenchmarkDAO
from wirelength.evaluation import load_benchmarks
from wirelength.exceptions.domain import DomainException
from wirelength.exceptions.notfound import NotFoundException
from wirelength.exceptions.parse import ParseException
from wirelength.exceptions.validation import ValidationException
from wirelength.types import BenchmarkRecord

HEADER = b"name,n_gates,rent_p,actual_lavg\n"


def _load(text):
    return load_benchmarks(io.BytesIO(text))


def test_header_only():
    assert _load(HEADER) == []


def test_single_row():
    records = _load(HEADER + b"c2146,2146,0.75,3.53\n")

    assert records == [BenchmarkRecord("c2146", 2146, 0.75, 3.53)]


def test_byte_order_mark_is_ignored():
    records = _load(b"\xef\xbb\xbf" + HEADER + b"c2146,2146,0.75,3.53\n")

    assert records == [BenchmarkRecord("c2146", 2146, 0.75, 3.53)]


def test_byte_order_mark_in_text_stream():
    records = load_benchmarks(io.StringIO("\ufeff" + HEADER.decode() + "c55,55,0.667,1.579\n"))

    assert records == [BenchmarkRecord("c55", 55, 0.667, 1.579)]


def test_comments_blanks_and_missing_actual():
    records = _load(b"# provenance\n\n" + HEADER + b"\nc55, 55, 0.667,\n# trailing\n")

    assert records == [BenchmarkRecord("c55", 55, 0.667, None)]


def test_out_of_range_exponent_names_the_line():
    with pytest.raises(ValidationException) as err:
        _load(b"# provenance\n" + HEADER + b"c1,100,0.6,2.0\nc2,100,1.2,2.0\n")

    assert err.value.details["line"] == 4
    assert "rent_p" in err.value.details
    assert str(err.value).startswith("line 4:")


@pytest.mark.parametrize("text, line", [
    (b"", 1),
    (b"name,gates,p,actual\n", 1),
    (HEADER + b"c1,100,0.6\n", 2),
    (HEADER + b"c1,many,0.6,2.0\n", 2),
    (HEADER + b"c1,100,0.6,2.0\nc2,100.5,0.6,2.0\n", 3),
    (HEADER + b"c1,100,high,2.0\n", 2),
    (b"\xff\xfe", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseException) as err:
        _load(text)

    assert err.value.line == line


def test_unsupported_format():
    with pytest.raises(DomainException):
        load_benchmarks(io.BytesIO(HEADER), format="xlsx")


def test_bundled_sets(app):
    # Create the DAO
    dao = BenchmarkDAO(app.config["BENCHMARK_DIR"])

    assert dao.all() == ["table1", "table2"]

    first = dao.find("table1")
    second = dao.find("table2")

    assert len(first) == 14
    assert len(second) == 9
    assert first[0] == BenchmarkRecord("c2146", 2146, 0.75, 3.53)
    assert first[-1] == BenchmarkRecord("c62", 62, 0.667, 2.08)
    assert second[0] == BenchmarkRecord("c55", 55, 0.583, 1.579)
    assert second[-1] == BenchmarkRecord("c1118", 1118, 0.69, 3.6)


def test_unknown_set(app):
    dao = BenchmarkDAO(app.config["BENCHMARK_DIR"])

    with pytest.raises(NotFoundException) as err:
        dao.find("table9")

    assert err.value.available == ("table1", "table2")
