def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERIA, RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, _ in CRITERIA:
        if name in RESULTS:
            ok, detail = RESULTS[name]
            terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
