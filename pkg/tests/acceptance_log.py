"""Shared store for the per-criterion PASS/FAIL lines."""

LINES: list[str] = []


def record(k: int, title: str, ok: bool, seconds: float, limit: float, detail: str = "") -> bool:
    timely = seconds < limit
    status = "PASS" if ok and timely else "FAIL"
    line = f"{status} criterion {k}: {title} ({seconds:.2f}s, limit {limit:g}s)"
    if detail:
        line += f" [{detail}]"
    LINES.append(line)
    print(line)
    return ok and timely
