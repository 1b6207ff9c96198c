"""Run reports and their json / csv / plain renderings."""
from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

# ints beyond this magnitude are written as decimal strings
_SAFE_INT = 2**53
PLAIN_ROW_LIMIT = 40


def jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, int):
        return obj if abs(obj) < _SAFE_INT else str(obj)
    if isinstance(obj, float):
        return "inf" if math.isinf(obj) else obj
    if isinstance(obj, Fraction):
        return str(obj)
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


@dataclass
class RunReport:
    command: str
    params: Dict[str, Any]
    result: Dict[str, Any]
    discrepancies: List[Any] = field(default_factory=list)
    elapsed_ms: float = 0.0
    version: str = ""

    @property
    def exit_code(self) -> int:
        return 1 if self.discrepancies else 0

    def to_dict(self) -> Dict[str, Any]:
        return jsonable(dataclasses.asdict(self))

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_dict(), indent=2)
        if fmt == "csv":
            return self._csv()
        return self._plain()

    def _csv(self) -> str:
        data = self.to_dict()
        buf = io.StringIO()
        rows = data["result"].get("rows")
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        else:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["key", "value"])
            for k, v in data["result"].items():
                writer.writerow([k, json.dumps(v) if isinstance(v, (dict, list)) else v])
        return buf.getvalue().rstrip("\n")

    def _plain(self) -> str:
        data = self.to_dict()
        lines = [f"{self.command}  ({', '.join(f'{k}={v}' for k, v in data['params'].items())})"]
        for k, v in data["result"].items():
            if isinstance(v, list) and v and isinstance(v[0], dict):
                lines.append(f"{k}:")
                for row in v[:PLAIN_ROW_LIMIT]:
                    lines.append("  " + "  ".join(f"{rk}={rv}" for rk, rv in row.items()))
                if len(v) > PLAIN_ROW_LIMIT:
                    lines.append(f"  ... {len(v) - PLAIN_ROW_LIMIT} more")
            elif isinstance(v, dict):
                lines.append(f"{k}:")
                for rk, rv in v.items():
                    lines.append(f"  {rk}: {rv}")
            else:
                lines.append(f"{k}: {v}")
        n = len(data["discrepancies"])
        lines.append(f"discrepancies: {n}")
        for d in data["discrepancies"][:PLAIN_ROW_LIMIT]:
            lines.append(f"  {d}")
        if n > PLAIN_ROW_LIMIT:
            lines.append(f"  ... {n - PLAIN_ROW_LIMIT} more")
        lines.append(f"elapsed: {self.elapsed_ms:.1f} ms  version {self.version}")
        return "\n".join(lines)
