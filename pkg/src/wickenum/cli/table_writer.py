import csv
import json
from typing import Any, TextIO

from wickenum.common_domain.enum.output_format import OutputFormat


class TableWriter:
    """Rows of exact values as JSON lines or CSV; rationals are already "p/q" strings, never floats."""

    def __init__(self, output_format: OutputFormat = OutputFormat.JSON):
        self.output_format = output_format

    def write(self, rows: list[dict[str, Any]], columns: list[str], stream: TextIO) -> int:
        match self.output_format:
            case OutputFormat.CSV:
                writer = csv.writer(stream, lineterminator="\n")
                writer.writerow(columns)
                for row in rows:
                    writer.writerow([TableWriter.cell(row.get(column)) for column in columns])
            case _:
                for row in rows:
                    stream.write(json.dumps({column: row.get(column) for column in columns}))
                    stream.write("\n")
        return len(rows)

    @staticmethod
    def cell(value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, (list, dict)):
            return json.dumps(value, sort_keys=True)
        return str(value)
