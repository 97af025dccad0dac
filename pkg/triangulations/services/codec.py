"""
Plain text triangulation format:

    tets <n>
    glue <tet>.<face> <tet'>.<face'> <v0v1v2>

one gluing per line, tetrahedra numbered from 1, faces and vertices from 0,
and ``<v0v1v2>`` the images of the source face's vertices in ascending order.
"""
import re
from pathlib import Path
from typing import Union

from core.exceptions import ExportError, TriangulationError, TriangulationFormatError
from triangulations.models import VERTICES, FaceGluing, Triangulation

HEADER = re.compile(r"^tets ([1-9][0-9]*)$")
GLUE = re.compile(r"^glue ([1-9][0-9]*)\.([0-3]) ([1-9][0-9]*)\.([0-3]) ([0-3]{3})$")


def dumps(triangulation: Triangulation) -> str:
    lines = [f"tets {triangulation.n}"]
    for g in triangulation.gluings:
        images = "".join(str(v) for v in g.face_images())
        lines.append(f"glue {g.tet + 1}.{g.face} {g.other_tet + 1}.{g.other_face} {images}")
    return "\n".join(lines) + "\n"


def _parse_gluing(match, line_number: int) -> FaceGluing:
    tet, face, other_tet, other_face = (int(match.group(i)) for i in range(1, 5))
    images = [int(c) for c in match.group(5)]
    if len(set(images)) != 3 or other_face in images:
        raise TriangulationFormatError(
            f"line {line_number}: {match.group(5)} is not a bijection onto face {other_face}"
        )
    perm = [0] * 4
    perm[face] = other_face
    for v, image in zip((v for v in VERTICES if v != face), images):
        perm[v] = image
    return FaceGluing(tet - 1, face, other_tet - 1, other_face, tuple(perm))


def loads(text: str, name: str = "") -> Triangulation:
    if not text.endswith("\n"):
        raise TriangulationFormatError("triangulation text must end with a newline")
    lines = text[:-1].split("\n")

    header = HEADER.match(lines[0])
    if header is None:
        raise TriangulationFormatError(f"line 1: expected 'tets <n>', got {lines[0]!r}")

    gluings = []
    for line_number, line in enumerate(lines[1:], start=2):
        match = GLUE.match(line)
        if match is None:
            raise TriangulationFormatError(f"line {line_number}: malformed gluing {line!r}")
        try:
            gluings.append(_parse_gluing(match, line_number))
        except TriangulationFormatError:
            raise
        except TriangulationError as exc:
            raise TriangulationFormatError(f"line {line_number}: {exc}") from exc

    try:
        return Triangulation(n=int(header.group(1)), gluings=tuple(gluings), name=name)
    except TriangulationError as exc:
        raise TriangulationFormatError(str(exc)) from exc


def write(triangulation: Triangulation, path: Union[str, Path]) -> Path:
    path = Path(path)
    try:
        path.write_text(dumps(triangulation))
    except OSError as exc:
        raise ExportError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


def read(path: Union[str, Path]) -> Triangulation:
    path = Path(path)
    return loads(path.read_text(), name=path.stem)
