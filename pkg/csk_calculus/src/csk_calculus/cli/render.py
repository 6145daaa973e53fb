from __future__ import annotations

import io
import json
from typing import Any

from rich.console import Console
from rich.table import Table

from csk_calculus.core.utils import safe_json_dumps, to_jsonable

TEXT_WIDTH = 120


def render_json(result: Any, *, indent: int | None) -> str:
    return safe_json_dumps(result, indent=indent) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value):
        return ", ".join(str(v) for v in value)
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))
    return str(value)


def render_text(result: Any, *, title: str | None = None) -> str:
    """Aligned two-column table; nested values are flattened one level."""
    data = to_jsonable(result)
    if not isinstance(data, dict):
        data = {"result": data}

    table = Table(title=title, show_header=True, header_style=None, expand=False)
    table.add_column("field", no_wrap=True)
    table.add_column("value", overflow="fold")
    for key, value in data.items():
        if isinstance(value, dict) and value and len(value) <= 8:
            for sub_key, sub_value in value.items():
                table.add_row(f"{key}.{sub_key}", _cell(sub_value))
        else:
            table.add_row(str(key), _cell(value))

    buf = io.StringIO()
    console = Console(file=buf, width=TEXT_WIDTH, color_system=None, force_terminal=False)
    console.print(table)
    return buf.getvalue()
