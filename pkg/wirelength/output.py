"""CSV and JSON rendering. JSON goes through the Flask app's JSON provider."""
from __future__ import annotations

import csv
import io
from enum import Enum

from flask import json


def round_significant(value, digits):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    return float(f"{value:.{digits}g}")


def _cell(value, digits):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    if isinstance(value, Enum):
        return value.value
    return str(value)


def _csv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render(columns, records, output_format, digits):
    """Render dict records, keeping `columns` in order for CSV.

    Floats carry `digits` significant digits in both formats, so the two
    renderings hold the same numbers.
    """
    if output_format == "json":
        payload = [{
            column: _json_value(record.get(column), digits) for column in columns
        } for record in records]
        return json.dumps(payload, indent=2) + "\n"
    return _csv(columns, [[_cell(record.get(column), digits) for column in columns]
                          for record in records])


def _json_value(value, digits):
    if isinstance(value, Enum):
        return value.value
    return round_significant(value, digits)


def _fixed(value, decimals):
    if value is None:
        return ""
    if decimals is None or isinstance(value, str):
        return str(value)
    return f"{value:.{decimals}f}"


def _table_payload(table):
    rows = [{
        column.name: (round(value, column.digits)
                      if isinstance(value, float) and column.digits is not None else value)
        for column, value in zip(table.columns, row)
    } for row in table.rows]
    return {"table": table.number, "title": table.title, "rows": rows}


def render_table(table, output_format):
    """Render a reproduced table with each column's own decimal places."""
    if output_format == "json":
        return json.dumps(_table_payload(table), indent=2) + "\n"
    names = [column.name for column in table.columns]
    header = f"# table {table.number}: {table.title}\n"
    return header + _csv(names, [[_fixed(value, column.digits)
                                  for column, value in zip(table.columns, row)]
                                 for row in table.rows])


def render_tables(tables, output_format):
    """Several tables: blank-line separated CSV sections, or one JSON list."""
    if output_format == "json":
        return json.dumps([_table_payload(table) for table in tables], indent=2) + "\n"
    return "\n".join(render_table(table, output_format) for table in tables)
