# src\formats\__init__.py
# Text codecs for instances and points, and the JSON run report.

from .instance_text import (
    parse_instance_text,
    parse_points_text,
    write_instance_text,
    write_points_text,
    format_number,
    read_text,
)
from .report import RunReport, REPORT_SCHEMA, SOLVER_VERSION, serialize_json, deserialize_json, without_timings
