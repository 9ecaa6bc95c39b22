#!/usr/bin/env python3
"""Build a planar GeoJSON of European country outlines from a world-atlas TopoJSON.

    npm pack world-atlas@2.0.2 && tar xzf world-atlas-2.0.2.tgz
    python3 tools/make_europe_dataset.py package/countries-10m.json data/europe-10m.geojson

Coordinates are projected with a spherical Lambert azimuthal equal-area
projection centred at 10E/52N and written in kilometres. Rounding to 0.1 m
and the source quantization leave a few self-touching rings; those are
repaired with shapely's make_valid and split into their polygon parts.
"""
import json
import math
import sys

from shapely.geometry import Polygon
from shapely.validation import make_valid

EUROPE = [
    "Albania", "Andorra", "Armenia", "Austria", "Azerbaijan", "Belarus",
    "Belgium", "Bosnia and Herz.", "Bulgaria", "Croatia", "Cyprus", "Czechia",
    "Denmark", "Estonia", "Finland", "France", "Georgia", "Germany", "Greece",
    "Hungary", "Iceland", "Ireland", "Italy", "Kazakhstan", "Kosovo", "Latvia",
    "Liechtenstein", "Lithuania", "Luxembourg", "Macedonia", "Malta", "Moldova",
    "Monaco", "Montenegro", "Netherlands", "Norway", "Poland", "Portugal",
    "Romania", "Russia", "San Marino", "Serbia", "Slovakia", "Slovenia",
    "Spain", "Sweden", "Switzerland", "Turkey", "Ukraine", "United Kingdom",
    "Vatican",
]
EARTH_RADIUS_KM = 6371.0
LON0, LAT0 = math.radians(10.0), math.radians(52.0)


def laea(lon, lat):
    lam, phi = math.radians(lon), math.radians(lat)
    k = math.sqrt(2.0 / (1.0 + math.sin(LAT0) * math.sin(phi)
                         + math.cos(LAT0) * math.cos(phi) * math.cos(lam - LON0)))
    x = k * math.cos(phi) * math.sin(lam - LON0)
    y = k * (math.cos(LAT0) * math.sin(phi)
             - math.sin(LAT0) * math.cos(phi) * math.cos(lam - LON0))
    return [round(EARTH_RADIUS_KM * x, 4), round(EARTH_RADIUS_KM * y, 4)]


def decode_arcs(topo):
    scale = topo["transform"]["scale"]
    shift = topo["transform"]["translate"]
    arcs = []
    for arc in topo["arcs"]:
        x = y = 0
        pts = []
        for dx, dy in arc:
            x += dx
            y += dy
            pts.append((x * scale[0] + shift[0], y * scale[1] + shift[1]))
        arcs.append(pts)
    return arcs


def ring(arcs, refs):
    pts = []
    for ref in refs:
        arc = arcs[ref] if ref >= 0 else arcs[~ref][::-1]
        pts.extend(arc if not pts else arc[1:])
    out = []
    for p in (laea(*q) for q in pts):
        if not out or out[-1] != p:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def polygon_parts(geom):
    if geom.is_empty:
        return []
    if geom.geom_type == "Polygon":
        # Repairs leave zero-width slivers behind; drop anything under 1 m^2.
        return [geom] if geom.area > 1e-6 else []
    if hasattr(geom, "geoms"):
        return [p for g in geom.geoms for p in polygon_parts(g)]
    return []


def clean_ring(coords):
    out = []
    for p in coords:
        p = [float(p[0]), float(p[1])]
        if not out or out[-1] != p:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def strictly_valid(poly):
    """Valid, with simple rings that share no point at all."""
    if not poly.is_valid:
        return False
    rings = [poly.exterior] + list(poly.interiors)
    if not all(r.is_simple for r in rings):
        return False
    return not any(a.intersects(b) for i, a in enumerate(rings) for b in rings[i + 1:])


def repaired(rings):
    poly = Polygon(rings[0], rings[1:])
    if strictly_valid(poly):
        return [rings]
    fixed = make_valid(poly)
    # Touching rings are legal in OGC terms but not for the labeller:
    # shrink by 0.1 m to pull them apart.
    parts = []
    for part in polygon_parts(fixed):
        parts += [part] if strictly_valid(part) else polygon_parts(part.buffer(-1e-4, join_style=2))
    out = []
    for part in parts:
        cleaned = [clean_ring(part.exterior.coords)]
        cleaned += [clean_ring(h.coords) for h in part.interiors]
        cleaned = [r for r in cleaned if len(r) >= 3]
        if cleaned:
            out.append(cleaned)
    return out


def main():
    src, dst = sys.argv[1], sys.argv[2]
    topo = json.load(open(src))
    arcs = decode_arcs(topo)
    features = []
    nodes = 0
    for geom in topo["objects"]["countries"]["geometries"]:
        name = geom["properties"]["name"]
        if name not in EUROPE:
            continue
        polys = geom["arcs"] if geom["type"] == "MultiPolygon" else [geom["arcs"]]
        parts = []
        for poly in polys:
            rings = [ring(arcs, r) for r in poly]
            rings = [r for r in rings if len(r) >= 3]
            if not rings:
                continue
            for fixed in repaired(rings):
                parts.append([r + [r[0]] for r in fixed])
                nodes += sum(len(r) for r in fixed)
        features.append({
            "type": "Feature",
            "id": geom.get("id", name),
            "properties": {"name": name},
            "geometry": {"type": "MultiPolygon", "coordinates": parts},
        })
    json.dump({"type": "FeatureCollection", "features": features},
              open(dst, "w"), separators=(",", ":"))
    print(f"{len(features)} countries, {nodes} nodes", file=sys.stderr)


if __name__ == "__main__":
    main()
