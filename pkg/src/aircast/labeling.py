"""Ground-truth air-quality labels from reference monitoring stations.

The hourly target value is the plain average of all available station
readings; the class is cut at the PM2.5 thresholds 15 / 35 / 75 ug/m3,
with boundary values belonging to the lower class.
"""

import math
from dataclasses import dataclass
from enum import IntEnum

from .errors import AllMissingError, NegativeValueError

GOOD_MAX = 15.0
MODERATE_MAX = 35.0
UNHEALTHY_MAX = 75.0


class AirQualityLabel(IntEnum):
    GOOD = 0
    MODERATE = 1
    UNHEALTHY = 2
    HAZARDOUS = 3


@dataclass(frozen=True)
class StationReading:
    """One hourly PM2.5 value from one reference station."""

    bucket_start: int
    station_id: int
    pm25: float


def classify_pm25(value: float) -> AirQualityLabel:
    """Discretize a PM2.5 concentration into the four-class scale."""
    if value < 0:
        raise NegativeValueError(f"PM2.5 cannot be negative, got {value}")
    if value <= GOOD_MAX:
        return AirQualityLabel.GOOD
    if value <= MODERATE_MAX:
        return AirQualityLabel.MODERATE
    if value <= UNHEALTHY_MAX:
        return AirQualityLabel.UNHEALTHY
    return AirQualityLabel.HAZARDOUS


def station_average(values) -> float:
    """Mean of the present station values; None/NaN entries are skipped."""
    present = [v for v in values if v is not None and not math.isnan(v)]
    if not present:
        raise AllMissingError("every station value is missing")
    return sum(present) / len(present)


def labels_by_bucket(readings) -> dict[int, AirQualityLabel]:
    """Average each bucket's station readings and classify the result."""
    grouped: dict[int, list[float]] = {}
    for r in readings:
        grouped.setdefault(r.bucket_start, []).append(r.pm25)
    return {
        bucket: classify_pm25(station_average(vals))
        for bucket, vals in sorted(grouped.items())
    }
