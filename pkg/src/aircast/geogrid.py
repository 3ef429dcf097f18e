"""Spatial grid binning and hourly aggregation of mobile sensor records.

A city bounding box is split into a regular rows x cols grid (32x32 by
default). Records are mapped to (cell, hour bucket), per-cell running sums
and counts are accumulated, and each populated bucket becomes a
:class:`GridFrame`. A frame renders to a normalized grayscale
:class:`PollutionImage` in which unvisited cells stay exactly zero.
"""

import logging
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import (
    EmptyInputError,
    NonPositiveScaleError,
    OutOfBoundsError,
    SmallCellWarning,
)

log = logging.getLogger("aircast.geogrid")

KM_PER_DEGREE = 111.32

POLLUTANT_FIELDS = ("pm25", "pm10", "co", "no2", "so2")


@dataclass(frozen=True)
class GridSpec:
    """Bounding box plus grid resolution.

    Warns (non-fatally) when a cell's physical edge comes out under 1 km,
    since sparser fleets cannot populate finer grids meaningfully.
    """

    lat_min: float
    lat_max: float
    lon_min: float
    lon_max: float
    rows: int = 32
    cols: int = 32

    def __post_init__(self):
        if not self.lat_min < self.lat_max:
            raise ValueError("lat_min must be < lat_max")
        if not self.lon_min < self.lon_max:
            raise ValueError("lon_min must be < lon_max")
        if self.rows < 1 or self.cols < 1:
            raise ValueError("grid must have at least 1 row and 1 column")
        edge_lat_km = self.step_lat * KM_PER_DEGREE
        mid_lat = 0.5 * (self.lat_min + self.lat_max)
        edge_lon_km = self.step_lon * KM_PER_DEGREE * math.cos(math.radians(mid_lat))
        if min(edge_lat_km, edge_lon_km) < 1.0:
            warnings.warn(
                f"grid cell edge is {min(edge_lat_km, edge_lon_km):.2f} km; "
                "cells under 1 km are usually too sparse for mobile sensing",
                SmallCellWarning,
                stacklevel=2,
            )

    @property
    def step_lat(self) -> float:
        return (self.lat_max - self.lat_min) / self.rows

    @property
    def step_lon(self) -> float:
        return (self.lon_max - self.lon_min) / self.cols

    def contains(self, lat: float, lon: float) -> bool:
        return (
            self.lat_min <= lat <= self.lat_max
            and self.lon_min <= lon <= self.lon_max
        )


def _record_violation(
    timestamp, lat, lon, pm25, pm10, co, no2, so2,
    temperature, humidity, pressure, precipitation, wind_speed, wind_direction,
) -> str | None:
    """Name the invariant a candidate record breaks, or None if valid."""
    if timestamp <= 0:
        return "timestamp must be positive"
    for name, value in (("pm25", pm25), ("pm10", pm10), ("co", co),
                        ("no2", no2), ("so2", so2)):
        if value < 0:
            return f"{name} must be non-negative"
    if not 0 <= humidity <= 100:
        return "humidity must be within [0, 100]"
    if not 0 <= wind_direction < 360:
        return "wind_direction must be within [0, 360)"
    if precipitation < 0:
        return "precipitation must be non-negative"
    if wind_speed < 0:
        return "wind_speed must be non-negative"
    return None


@dataclass(frozen=True)
class SensorRecord:
    """One timestamped, geolocated reading from one mobile sensor."""

    timestamp: int
    lat: float
    lon: float
    pm25: float
    pm10: float
    co: float
    no2: float
    so2: float
    temperature: float
    humidity: float
    pressure: float
    precipitation: float
    wind_speed: float
    wind_direction: float

    def __post_init__(self):
        reason = _record_violation(
            self.timestamp, self.lat, self.lon, self.pm25, self.pm10,
            self.co, self.no2, self.so2, self.temperature, self.humidity,
            self.pressure, self.precipitation, self.wind_speed,
            self.wind_direction,
        )
        if reason is not None:
            raise ValueError(reason)


@dataclass(frozen=True)
class GridFrame:
    """Per-cell sums and counts of one pollutant over one time bucket."""

    bucket_start: int
    pollutant: str
    sum: np.ndarray
    count: np.ndarray

    def mean(self) -> np.ndarray:
        """Per-cell mean; cells that saw no record report 0."""
        out = np.zeros_like(self.sum)
        seen = self.count > 0
        out[seen] = self.sum[seen] / self.count[seen]
        return out


@dataclass(frozen=True)
class PollutionImage:
    """Normalized [0, 1] grayscale rendering of a GridFrame."""

    pixels: np.ndarray
    scale: float

    def __post_init__(self):
        if np.any(self.pixels < 0) or np.any(self.pixels > 1):
            raise ValueError("pixels must lie in [0, 1]")


def grid_index(lat: float, lon: float, spec: GridSpec) -> tuple[int, int]:
    """Map a point to its (row, col) cell.

    Points exactly on the max edge clamp to the last index; points outside
    the bounding rectangle raise :class:`OutOfBoundsError`.
    """
    if not spec.contains(lat, lon):
        raise OutOfBoundsError(
            f"point ({lat}, {lon}) outside bbox "
            f"[{spec.lat_min}, {spec.lat_max}] x [{spec.lon_min}, {spec.lon_max}]"
        )
    row = int(math.floor((lat - spec.lat_min) / spec.step_lat))
    col = int(math.floor((lon - spec.lon_min) / spec.step_lon))
    return min(row, spec.rows - 1), min(col, spec.cols - 1)


def time_bucket(timestamp: int, interval: int) -> int:
    """Start of the interval-aligned bucket containing ``timestamp``."""
    if interval <= 0:
        raise ValueError("interval must be positive")
    return interval * (timestamp // interval)


def aggregate_frames(records, spec: GridSpec, interval: int = 3600,
                     pollutant: str = "pm25"):
    """Group one pollutant by (cell, bucket) into per-bucket GridFrames.

    Out-of-bounds records are dropped and tallied, not fatal. Returns
    ``(frames, n_dropped)`` with frames sorted by bucket_start; raises
    :class:`EmptyInputError` when nothing survives the bounds filter.
    Accumulation runs in record order, so results are bit-reproducible.
    """
    if pollutant not in POLLUTANT_FIELDS:
        raise ValueError(f"unknown pollutant {pollutant!r}; expected one of {POLLUTANT_FIELDS}")
    if interval <= 0:
        raise ValueError("interval must be positive")

    n = len(records)
    lat = np.fromiter((r.lat for r in records), dtype=np.float64, count=n)
    lon = np.fromiter((r.lon for r in records), dtype=np.float64, count=n)
    ts = np.fromiter((r.timestamp for r in records), dtype=np.int64, count=n)
    val = np.fromiter((getattr(r, pollutant) for r in records), dtype=np.float64, count=n)

    inside = (
        (lat >= spec.lat_min) & (lat <= spec.lat_max)
        & (lon >= spec.lon_min) & (lon <= spec.lon_max)
    )
    n_dropped = int(n - inside.sum())
    if n_dropped:
        log.info("dropped %d out-of-bounds records", n_dropped)
    lat, lon, ts, val = lat[inside], lon[inside], ts[inside], val[inside]
    if lat.size == 0:
        raise EmptyInputError("no record lies inside the grid bounding box")

    # same arithmetic as grid_index, vectorized (incl. the max-edge clamp)
    rows = np.floor((lat - spec.lat_min) / spec.step_lat).astype(np.int64)
    cols = np.floor((lon - spec.lon_min) / spec.step_lon).astype(np.int64)
    np.clip(rows, 0, spec.rows - 1, out=rows)
    np.clip(cols, 0, spec.cols - 1, out=cols)

    buckets = interval * (ts // interval)
    unique_buckets, bucket_idx = np.unique(buckets, return_inverse=True)
    sums, counts = kernels.active.grid_accumulate(
        np.ascontiguousarray(bucket_idx.astype(np.int64)),
        rows, cols, np.ascontiguousarray(val),
        unique_buckets.size, spec.rows, spec.cols,
    )

    frames = [
        GridFrame(
            bucket_start=int(b),
            pollutant=pollutant,
            sum=sums[k],
            count=counts[k],
        )
        for k, b in enumerate(unique_buckets)
    ]
    return frames, n_dropped


def render_image(frame: GridFrame, scale: float) -> PollutionImage:
    """Render a frame to [0, 1] pixels: clamp(mean / scale), empty cells 0."""
    if scale <= 0:
        raise NonPositiveScaleError(f"scale must be positive, got {scale}")
    pixels = np.clip(frame.mean() / scale, 0.0, 1.0)
    pixels[frame.count == 0] = 0.0
    return PollutionImage(pixels=pixels, scale=float(scale))


def normalization_scale(frames) -> float:
    """Global image scale: the maximum cell mean over the given frames.

    Falls back to 1.0 when every populated cell averaged zero.
    """
    top = 0.0
    for frame in frames:
        if frame.count.any():
            top = max(top, float(frame.mean().max()))
    return top if top > 0 else 1.0


@dataclass(frozen=True)
class HourlySample:
    """City-wide averages for one time bucket (pollution + weather)."""

    bucket_start: int
    pm25: float
    temperature: float
    humidity: float
    precipitation: float
    wind_speed: float
    wind_direction: float


def city_hourly_series(records, interval: int = 3600) -> list[HourlySample]:
    """Average all records per bucket into one city-level hourly sample.

    Wind direction is averaged as a unit vector (mean sin/cos, then the
    angle of the mean), avoiding the 0/360 wrap artifact.
    """
    if not records:
        raise EmptyInputError("no records to build an hourly series from")
    ts = np.fromiter((r.timestamp for r in records), dtype=np.int64, count=len(records))
    buckets = interval * (ts // interval)
    order = np.argsort(buckets, kind="stable")
    uniq, starts = np.unique(buckets[order], return_index=True)

    def column(name):
        return np.fromiter((getattr(r, name) for r in records),
                           dtype=np.float64, count=len(records))[order]

    pm25 = column("pm25")
    temp = column("temperature")
    hum = column("humidity")
    precip = column("precipitation")
    wspd = column("wind_speed")
    wdir = np.radians(column("wind_direction"))
    wsin, wcos = np.sin(wdir), np.cos(wdir)

    samples = []
    bounds = list(starts) + [len(records)]
    for k, bucket in enumerate(uniq):
        sl = slice(bounds[k], bounds[k + 1])
        direction = math.degrees(math.atan2(wsin[sl].mean(), wcos[sl].mean())) % 360.0
        samples.append(HourlySample(
            bucket_start=int(bucket),
            pm25=float(pm25[sl].mean()),
            temperature=float(temp[sl].mean()),
            humidity=float(hum[sl].mean()),
            precipitation=float(precip[sl].mean()),
            wind_speed=float(wspd[sl].mean()),
            wind_direction=direction,
        ))
    return samples
