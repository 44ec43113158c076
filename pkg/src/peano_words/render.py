"""SVG rendering of a curve iteration as a single polyline."""

from __future__ import annotations

from .errors import DomainError
from .words import iter_chunks

MAX_RENDER_N = 10

# letter -> unit step in math coordinates (y up)
STEPS = {1: (0, 1), 2: (1, 0), 3: (0, -1), 4: (-1, 0)}


def curve_points(n: int) -> list[tuple[int, int]]:
    """Vertices of the walk for X_n, starting at the origin, y pointing up."""
    if not 1 <= n <= MAX_RENDER_N:
        raise DomainError(f"render supports 1 <= n <= {MAX_RENDER_N}, got {n}")
    x = y = 0
    points = [(0, 0)]
    for chunk in iter_chunks(n):
        for b in chunk:
            dx, dy = STEPS[b - 48]
            x += dx
            y += dy
            points.append((x, y))
    return points


def render_svg(n: int, unit: int = 8, pad: int = 1) -> str:
    points = curve_points(n)
    xs = [p[0] for p in points]
    ys = [-p[1] for p in points]  # screen y grows downward
    min_x, max_x = min(xs) - pad, max(xs) + pad
    min_y, max_y = min(ys) - pad, max(ys) + pad
    width, height = max_x - min_x, max_y - min_y
    coords = " ".join(f"{x},{y}" for x, y in zip(xs, ys))
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width * unit}" height="{height * unit}" '
        f'viewBox="{min_x} {min_y} {width} {height}">\n'
        f'  <title>X_{n}</title>\n'
        f'  <polyline fill="none" stroke="black" stroke-width="0.2" '
        f'stroke-linejoin="round" points="{coords}"/>\n'
        "</svg>\n"
    )
