from iwasawa.reports.codec import (
    decode_element,
    decode_matrix,
    encode_element,
    encode_matrix,
    to_jsonable,
)
from iwasawa.reports.render import CSV_COLUMNS, render_csv, render_json
from iwasawa.reports.runconfig import load_runconfig, validate_runconfig

__all__ = [
    "CSV_COLUMNS",
    "decode_element",
    "decode_matrix",
    "encode_element",
    "encode_matrix",
    "load_runconfig",
    "render_csv",
    "render_json",
    "to_jsonable",
    "validate_runconfig",
]
