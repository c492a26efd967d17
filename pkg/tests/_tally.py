"""Counts executed property-test cases so the acceptance run can report a total."""

COUNT = 0


def tick() -> None:
    global COUNT
    COUNT += 1
