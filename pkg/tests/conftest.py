_LINES: list[str] = []


def record(ok: bool, label: str, detail: str = "") -> None:
    if len(detail) > 90:
        detail = detail[:87] + "..."
    _LINES.append(f"{'PASS' if ok else 'FAIL'}  {label:<60} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in _LINES:
        terminalreporter.write_line(line)
