from pydantic import BaseModel, ConfigDict, model_validator

from wickenum.census.simple_graph import SimpleGraph
from wickenum.common_domain.engine_errors import OddEulerDefect


def _cycles(permutation: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = [False] * len(permutation)
    cycles = []
    for start in range(len(permutation)):
        if seen[start]:
            continue
        cycle = []
        point = start
        while not seen[point]:
            seen[point] = True
            cycle.append(point)
            point = permutation[point]
        cycles.append(tuple(cycle))
    return cycles


class FatGraph(BaseModel):
    """
    Rotation system on half-edges 0..2e-1: sigma's cycles are the cyclic orders at the vertices, alpha is the
    fixed-point-free involution pairing half-edges into edges. Faces are the cycles of h -> sigma(alpha(h)).
    """

    model_config = ConfigDict(frozen=True)

    sigma: tuple[int, ...]
    alpha: tuple[int, ...]

    @model_validator(mode="after")
    def validate_rotation_system(self) -> "FatGraph":
        size = len(self.sigma)
        if len(self.alpha) != size or sorted(self.sigma) != list(range(size)):
            raise ValueError(f"sigma {self.sigma} is not a permutation of the {len(self.alpha)} half-edges")
        for half_edge, partner in enumerate(self.alpha):
            if partner == half_edge or not 0 <= partner < size or self.alpha[partner] != half_edge:
                raise ValueError(f"alpha {self.alpha} is not a fixed-point-free involution")
        return self

    @classmethod
    def from_degrees(cls, degrees: list[int], alpha: tuple[int, ...]) -> "FatGraph":
        """Vertices own consecutive blocks of half-edges, rotated in increasing order."""
        sigma = []
        offset = 0
        for degree in degrees:
            sigma.extend(offset + (index + 1) % degree for index in range(degree))
            offset += degree
        return cls(sigma=tuple(sigma), alpha=alpha)

    @property
    def half_edge_count(self) -> int:
        return len(self.sigma)

    @property
    def edge_count(self) -> int:
        return len(self.sigma) // 2

    def vertices(self) -> list[tuple[int, ...]]:
        return _cycles(self.sigma)

    def face_permutation(self) -> tuple[int, ...]:
        return tuple(self.sigma[self.alpha[half_edge]] for half_edge in range(len(self.sigma)))

    def faces(self) -> list[tuple[int, ...]]:
        return _cycles(self.face_permutation())

    def component_count(self) -> int:
        parent = list(range(len(self.sigma)))

        def find(point: int) -> int:
            while parent[point] != point:
                parent[point] = parent[parent[point]]
                point = parent[point]
            return point

        for half_edge in range(len(self.sigma)):
            for partner in (self.sigma[half_edge], self.alpha[half_edge]):
                parent[find(half_edge)] = find(partner)
        return len({find(half_edge) for half_edge in range(len(self.sigma))})

    def genus(self) -> int:
        components = self.component_count()
        edges = self.edge_count
        vertices = len(self.vertices())
        faces = len(self.faces())
        twice_genus = 2 * components + edges - vertices - faces
        if twice_genus % 2 or twice_genus < 0:
            raise OddEulerDefect(twice_genus, components, edges, vertices, faces)
        return twice_genus // 2

    def dual(self) -> "Multigraph":
        """One vertex per face; each edge joins the faces on its two sides (a loop when they coincide)."""
        face_of = {}
        faces = self.faces()
        for index, face in enumerate(faces):
            for half_edge in face:
                face_of[half_edge] = index
        edges = [
            (face_of[half_edge], face_of[partner])
            for half_edge, partner in enumerate(self.alpha)
            if half_edge < partner
        ]
        return Multigraph(n=len(faces), edges=edges)


class Multigraph(BaseModel):
    """Abstract multigraph on vertices 0..n-1; loops and parallel edges allowed."""

    model_config = ConfigDict(frozen=True)

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_simple(self) -> bool:
        normalized = [tuple(sorted(edge)) for edge in self.edges]
        return all(u != v for u, v in normalized) and len(set(normalized)) == len(normalized)

    def is_nimple(self) -> bool:
        touched = {vertex for edge in self.edges for vertex in edge}
        return self.is_simple() and len(touched) == self.n

    def to_simple_graph(self) -> SimpleGraph | None:
        return SimpleGraph(n=self.n, edges=self.edges) if self.is_simple() else None


def contract(dual: Multigraph, partition: list[list[int]]) -> Multigraph:
    """Merge every class of the partition of the dual's vertices into one vertex, keeping all edges."""
    class_of = {}
    for index, block in enumerate(partition):
        for vertex in block:
            class_of[vertex] = index
    if sorted(class_of) != list(range(dual.n)):
        raise ValueError(f"{partition} does not partition the {dual.n} dual vertices")
    return Multigraph(n=len(partition), edges=[(class_of[u], class_of[v]) for u, v in dual.edges])
