"""
Communication time: measure of the instants at which at least one holder is in contact.
"""
import math
from typing import Sequence

from models.errors import DomainError
from models.mobility_model import ContactTimeline


def union_communication_time(timelines: Sequence[ContactTimeline], window: float) -> float:
    """
    Length of {t in [0, window]: some timeline is in contact at t}.

    Args:
        timelines: Pair timelines, each covering at least the window
        window: Deadline window in seconds, > 0

    Returns:
        Communication time in [0, window]; 0 for no timelines
    """
    if not window > 0.0:
        raise DomainError(f"window must be positive, got {window}")
    intervals = []
    for timeline in timelines:
        if timeline.horizon < window:
            raise DomainError(f"timeline covers {timeline.horizon} s, shorter than the window {window} s")
        intervals.extend(timeline.contact_intervals(window))
    if not intervals:
        return 0.0

    intervals.sort()
    lengths = []
    current_start, current_end = intervals[0]
    for start, end in intervals[1:]:
        if start > current_end:
            lengths.append(current_end - current_start)
            current_start, current_end = start, end
        elif end > current_end:
            current_end = end
    lengths.append(current_end - current_start)
    return min(window, math.fsum(lengths))
