"""
Named triangulations used as fixed reference points.
"""
from triangulations.models import FaceGluing, Triangulation

IDENTITY = (0, 1, 2, 3)
SWAP_01 = (1, 0, 2, 3)
SWAP_23 = (0, 1, 3, 2)


def doubled_tetrahedron() -> Triangulation:
    """Two copies of a tetrahedron glued by the identity along every face."""
    gluings = tuple(FaceGluing(0, face, 1, face, IDENTITY) for face in range(4))
    return Triangulation(n=2, gluings=gluings, name="example-doubled")


def folded_tetrahedron() -> Triangulation:
    """One tetrahedron with faces 0,1 folded together and faces 2,3 folded together."""
    gluings = (
        FaceGluing(0, 0, 0, 1, SWAP_01),
        FaceGluing(0, 2, 0, 3, SWAP_23),
    )
    return Triangulation(n=1, gluings=gluings, name="small")


def twisted_fold() -> Triangulation:
    """Like ``folded_tetrahedron`` but faces 0,1 are glued by an even permutation."""
    gluings = (
        FaceGluing(0, 0, 0, 1, (1, 0, 3, 2)),
        FaceGluing(0, 2, 0, 3, SWAP_23),
    )
    return Triangulation(n=1, gluings=gluings, name="twisted-fold")


def large_boundary_figure() -> Triangulation:
    """
    Four tetrahedra: F glues faces 0 and 1 of tetrahedra 1,2 and of 3,4;
    G glues faces 2 and 3 of tetrahedra 1,3 and of 2,4.
    """
    gluings = []
    for first, second in ((0, 1), (2, 3)):
        for face in (0, 1):
            gluings.append(FaceGluing(first, face, second, face, SWAP_23))
    for first, second in ((0, 2), (1, 3)):
        for face in (2, 3):
            gluings.append(FaceGluing(first, face, second, face, SWAP_01))
    return Triangulation(n=4, gluings=tuple(gluings), name="large-figure")
