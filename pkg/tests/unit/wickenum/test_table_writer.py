from io import StringIO

from wickenum import OutputFormat
from wickenum.cli.table_writer import TableWriter


# noinspection PyMethodMayBeStatic
class TestTableWriter:
    def write__should_emit_one_json_object_per_row_in_column_order(self):
        stream = StringIO()
        written = TableWriter().write([{"r": 1, "p": "3/1", "extra": 0}, {"r": 2}], ["r", "p"], stream)
        assert written == 2
        assert stream.getvalue() == '{"r": 1, "p": "3/1"}\n{"r": 2, "p": null}\n'

    def write__should_emit_csv_with_header_and_blank_cells_for_missing_values(self):
        stream = StringIO()
        rows = [{"section": "k=1", "monomial": {"z_1": 2}, "lhs": "1/1"}]
        TableWriter(OutputFormat.CSV).write(rows, ["section", "monomial", "lhs", "rhs"], stream)
        assert stream.getvalue().splitlines() == ["section,monomial,lhs,rhs", 'k=1,"{""z_1"": 2}",1/1,']

    def cell__should_serialize_nested_values_as_sorted_json(self):
        assert TableWriter.cell({"y": 1, "N": -1}) == '{"N": -1, "y": 1}'
        assert TableWriter.cell([1, 2]) == "[1, 2]"
        assert TableWriter.cell(None) == ""
        assert TableWriter.cell("-1/4") == "-1/4"
