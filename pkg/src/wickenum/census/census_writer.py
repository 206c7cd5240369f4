import csv
import json
import logging
from typing import TextIO

from pydantic import BaseModel

from wickenum.census.cover_enumerator import dcdc_orbits, tdc_distribution
from wickenum.census.graph_canonizer import adjacency_code, automorphism_order
from wickenum.census.simple_graph import SimpleGraph
from wickenum.common_domain.enum.output_format import OutputFormat
from wickenum.common_util.trace_level_logger import get_logger

logger = get_logger(__name__)


class CensusEntry(BaseModel):
    n: int
    edges: list[tuple[int, int]]
    graph6: str
    code: int
    aut_order: int
    tdc_counts: dict[int, int] | None = None
    dcdc_count: int | None = None
    dcdc_stabilizer_orders: list[int] | None = None


def census_entry(graph: SimpleGraph, with_tdc: bool = False, with_dcdc: bool = False) -> CensusEntry:
    entry = CensusEntry(
        n=graph.n,
        edges=list(graph.edges),
        graph6=graph.graph6(),
        code=adjacency_code(graph),
        aut_order=automorphism_order(graph),
    )
    if with_tdc:
        entry.tdc_counts = dict(sorted(tdc_distribution(graph).items()))
    if with_dcdc:
        orbits = dcdc_orbits(graph)
        entry.dcdc_count = sum(orbit.orbit_size for orbit in orbits)
        entry.dcdc_stabilizer_orders = [orbit.stabilizer_order for orbit in orbits]
    return entry


class CensusWriter:
    CSV_COLUMNS = ["n", "edges", "graph6", "code", "aut_order", "tdc_counts", "dcdc_count", "dcdc_stabilizer_orders"]

    def __init__(self, output_format: OutputFormat = OutputFormat.JSON, log_level: int = None):
        self.output_format = output_format
        self.logger = logger.getChild(self.__class__.__name__)
        if log_level is not None:
            self.logger.setLevel(log_level)

    def write(self, entries: list[CensusEntry], stream: TextIO) -> int:
        entries = sorted(entries, key=lambda entry: (entry.n, entry.code))
        if self.output_format == OutputFormat.CSV:
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(self.CSV_COLUMNS)
            for entry in entries:
                row = entry.model_dump()
                writer.writerow(
                    [
                        json.dumps(row[column]) if isinstance(row[column], (list, dict)) else row[column]
                        for column in self.CSV_COLUMNS
                    ]
                )
        else:
            for entry in entries:
                stream.write(entry.model_dump_json(exclude_none=True))
                stream.write("\n")
        if self.logger.isEnabledFor(logging.DEBUG):
            self.logger.debug(f"wrote {len(entries)} census entries as {self.output_format}")
        return len(entries)
