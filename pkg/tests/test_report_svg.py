"""Canonical JSON reports and deterministic SVG charts."""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET

import pytest

from laneflow import VehicleRecord, canonical_json, render_report, report_to_dict, simulate_part1
from laneflow.svgchart import HEIGHT, WIDTH, Series, render_line_chart


def sample_report():
    vehicles = [
        VehicleRecord(id="v1", speed=35, arrival=0),
        VehicleRecord(id="v2", speed=45, arrival=1),
        VehicleRecord(id="v3", speed=5, arrival=0),
    ]
    return simulate_part1(vehicles)


def test_canonical_json_is_sorted_compact_and_newline_terminated():
    text = canonical_json({"b": 1, "a": [1, 2], "c": {"z": 0, "y": 1}})
    assert text == '{"a":[1,2],"b":1,"c":{"y":1,"z":0}}\n'


def test_canonical_json_rejects_non_finite():
    with pytest.raises(ValueError):
        canonical_json({"x": float("nan")})
    with pytest.raises(ValueError):
        canonical_json({"x": float("inf")})


def test_report_field_names_and_lane_keys():
    payload = report_to_dict(sample_report())
    assert set(payload) == {
        "algorithm",
        "countingMode",
        "laneCount",
        "transitionCount",
        "events",
        "laneAverageSpeed",
        "lanePopulation",
    }
    assert set(payload["laneAverageSpeed"]) == {"1", "2"}
    assert set(payload["lanePopulation"]) == {"1", "2"}
    event = payload["events"][0]
    assert set(event) == {"overtakerId", "overtakenId", "fromLane", "toLane", "catchUpTicks"}


def test_rendered_report_round_trips_and_repeats():
    report = sample_report()
    first = render_report(report)
    second = render_report(report)
    assert first == second
    assert first.endswith("\n")
    parsed = json.loads(first)
    assert parsed["algorithm"] == "part1"
    assert parsed["laneCount"] == 2
    assert parsed["transitionCount"] == 1


def chart(series_count=2):
    series = [
        Series(name=f"s{i}", points=((10.0, 1.0 + i), (20.0, 4.0 + i), (30.0, 3.0 + i)))
        for i in range(series_count)
    ]
    return render_line_chart(series, title="t", x_label="x", y_label="y")


def test_chart_is_well_formed_xml_with_fixed_viewport():
    root = ET.fromstring(chart())
    assert root.tag.endswith("svg")
    assert root.get("width") == str(WIDTH)
    assert root.get("height") == str(HEIGHT)


def test_chart_has_exactly_one_polyline_per_series():
    for count in (1, 2, 3):
        root = ET.fromstring(chart(count))
        polylines = [el for el in root.iter() if el.tag.endswith("polyline")]
        assert len(polylines) == count


def test_chart_is_deterministic():
    assert chart() == chart()


def test_chart_coordinates_have_two_decimals():
    root = ET.fromstring(chart(1))
    polyline = next(el for el in root.iter() if el.tag.endswith("polyline"))
    for pair in polyline.get("points").split():
        x, y = pair.split(",")
        assert len(x.rsplit(".", 1)[1]) == 2
        assert len(y.rsplit(".", 1)[1]) == 2
