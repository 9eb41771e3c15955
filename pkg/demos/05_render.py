"""Draw the whole catalog as SVG files in demos/out/.

Each drawing is a stereographic view of the sphere: one region is sent
to infinity and pinned on a regular polygon, the rest of the subdivided
map relaxes to the barycentre of its neighbours.  Drawings are validated
numerically (no improper segment crossings) before they are written.
"""

from pathlib import Path

from circlepairs import decode, enumerate_up_to, layout, to_svg
from circlepairs.render import drawn_face_count

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

for level in enumerate_up_to(10):
    for index, cls in enumerate(level.classes, start=1):
        arr = decode(cls.code)
        lay = layout(arr)
        assert drawn_face_count(arr, lay) == arr.n_points + 2
        name = f"{level.n_points}-{index}-{'S' if cls.symmetric else 'A'}.svg"
        (out_dir / name).write_text(to_svg(arr, lay), encoding="utf-8")
        print("wrote", out_dir / name)

print()
print("open the files in a browser; curve 1 is blue, curve 2 red,")
print("crossing markers black; the outer region is the unbounded one")
