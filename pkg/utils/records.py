import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, TextIO, Tuple, Union

from asm3.core.constants import POLY_HEADER, TABLE_HEADER, TOTALS_HEADER, VERIFY_HEADER
from asm3.core.rational import rat_to_str

FORMAT_CSV = "csv"
FORMAT_JSON = "json"
FORMATS = (FORMAT_CSV, FORMAT_JSON)

SCHEMA_TABLE = "table"
SCHEMA_TOTALS = "totals"
SCHEMA_POLY = "poly"
SCHEMA_VERIFY = "verify"

SCHEMAS: Dict[str, Tuple[str, ...]] = {
    SCHEMA_TABLE: TABLE_HEADER,
    SCHEMA_TOTALS: TOTALS_HEADER,
    SCHEMA_POLY: POLY_HEADER,
    SCHEMA_VERIFY: VERIFY_HEADER,
}

# Columns carried as plain integers; every other column is an exact string
INDEX_COLUMNS = ("n", "r", "degree")

Value = Union[int, str]


@dataclass(frozen=True)
class OutputRecord:
    schema: str
    values: Tuple[Value, ...]

    def __post_init__(self):
        header = SCHEMAS[self.schema]
        assert len(self.values) == len(header), f"{self.schema} record needs {len(header)} values"
        for name, value in zip(header, self.values):
            if name in INDEX_COLUMNS:
                assert isinstance(value, int), f"{name} must be an int, got {value!r}"
            else:
                assert isinstance(value, str), f"{name} must be an exact string, got {value!r}"

    def as_dict(self) -> Dict[str, Value]:
        return dict(zip(SCHEMAS[self.schema], self.values))


def table_record(n: int, r: int, count: int) -> OutputRecord:
    return OutputRecord(SCHEMA_TABLE, (n, r, str(count)))


def totals_record(n: int, count: int) -> OutputRecord:
    return OutputRecord(SCHEMA_TOTALS, (n, str(count)))


def poly_record(degree: int, coeff: Fraction) -> OutputRecord:
    return OutputRecord(SCHEMA_POLY, (degree, rat_to_str(coeff)))


def verify_record(suite: str, case: str, status: str, detail: str = "") -> OutputRecord:
    return OutputRecord(SCHEMA_VERIFY, (suite, case, status, detail))


def emit(records: Iterable[OutputRecord], schema: str, fmt: str, stream: TextIO) -> None:
    """Write records as csv (header row always present) or as one json array"""
    records = list(records)
    if fmt == FORMAT_CSV:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(SCHEMAS[schema])
        for record in records:
            writer.writerow(record.values)
    elif fmt == FORMAT_JSON:
        json.dump([record.as_dict() for record in records], stream)
        stream.write("\n")
    else:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def emit_to_string(records: Iterable[OutputRecord], schema: str, fmt: str) -> str:
    buf = io.StringIO()
    emit(records, schema, fmt, buf)
    return buf.getvalue()


def _typed(schema: str, raw: Dict[str, Value]) -> OutputRecord:
    header = SCHEMAS[schema]
    return OutputRecord(schema, tuple(int(raw[name]) if name in INDEX_COLUMNS else str(raw[name])
                                      for name in header))


def parse(text: str, schema: str, fmt: str) -> List[OutputRecord]:
    """Read back what `emit` wrote"""
    if fmt == FORMAT_CSV:
        reader = csv.DictReader(io.StringIO(text))
        return [_typed(schema, row) for row in reader]
    elif fmt == FORMAT_JSON:
        return [_typed(schema, row) for row in json.loads(text)]
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
