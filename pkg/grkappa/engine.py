"""Facade over the combinatorics core with caching and a worker pool."""

import asyncio
import logging
import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from types import TracebackType
from typing import Any, TypeVar

from .cache import MatrixCache
from .config import GrkappaConfig
from .core.cartan import DominantWeight, RootElement, defect
from .core.crystal import (
    CrystalGraph,
    crystal_graph,
    enumerate_restricted,
    is_restricted,
    mullineux,
    restricted_of_size,
)
from .core.decomp import (
    CACHED_METHOD,
    DecompositionMatrix,
    check_method,
    decomposition_matrix,
    irreducible_qcharacters,
)
from .core.errors import DomainError
from .core.fock import FockVector, fock_E, fock_F, relevant_residues, verify_uqg_relations
from .core.laurent import LaurentPoly
from .core.multipartition import Multipartition, blocks, content
from .core.seminormal import KLRRep, build_seminormal, verify_klr_relations
from .core.tableaux import (
    QCharacter,
    ResidueSequence,
    block_graded_dimension,
    block_graded_dimension_total,
    specht_qcharacter,
)
from .core.verification import Violation

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class BlockSummary:
    alpha: RootElement
    defect: int
    members: list[Multipartition]
    restricted: list[Multipartition]


def compute_matrix(
    alpha: RootElement,
    weight: DominantWeight,
    method: str,
) -> DecompositionMatrix:
    """Worker entry point: one block, one method (or every method for ``all``)."""
    started = time.perf_counter()
    matrix = decomposition_matrix(alpha, weight, method)
    logger.info(
        f"Block {alpha} ({method}) computed in {time.perf_counter() - started:.2f}s"
    )
    return matrix


def compute_total(alpha: RootElement, weight: DominantWeight) -> LaurentPoly:
    return block_graded_dimension_total(alpha, weight)


def compute_irreducibles(
    matrix: DecompositionMatrix,
) -> dict[Multipartition, QCharacter]:
    return irreducible_qcharacters(matrix.alpha, matrix.weight, matrix)


class HeckeEngine:
    """Orchestrating entry point used by every command handler.

    Owns the configuration, the dominant weight, the matrix cache and, when
    more than one job is requested, a process pool shared across blocks.
    """

    def __init__(self, config: GrkappaConfig):
        self.config = config
        self.weight = DominantWeight(tuple(config.kappa), config.e)
        self.cache = MatrixCache(config.cache_dir if config.use_cache else None)
        self._executor: ProcessPoolExecutor | None = None

    async def __aenter__(self) -> "HeckeEngine":
        if self.config.jobs > 1:
            self._executor = ProcessPoolExecutor(max_workers=self.config.jobs)
            logger.info(f"Started worker pool with {self.config.jobs} processes")
        return self

    async def __aexit__(
        self,
        exc_type: type[BaseException] | None,
        exc_val: BaseException | None,
        exc_tb: TracebackType | None,
    ) -> None:
        if self._executor is not None:
            self._executor.shutdown()
            self._executor = None

    async def _run(self, func: Callable[..., T], *args: Any) -> T:
        if self._executor is None:
            return func(*args)
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(self._executor, partial(func, *args))

    # -- inputs ---------------------------------------------------------------

    def check_multipartition(self, mu: Multipartition) -> Multipartition:
        if mu.level != self.weight.level:
            raise DomainError(
                f"{mu} has {mu.level} components but kappa has level {self.weight.level}"
            )
        return mu

    def normalize_alpha(self, alpha: RootElement) -> RootElement:
        reduced: dict[int, int] = {}
        for i, c in alpha.coeffs:
            key = self.weight.reduce(i)
            reduced[key] = reduced.get(key, 0) + c
        return RootElement.from_mapping(reduced)

    def block_alphas(
        self,
        d: int | None,
        alpha: RootElement | None,
    ) -> list[RootElement]:
        """The requested block, or every block of size d."""
        if alpha is not None:
            return [self.normalize_alpha(alpha)]
        if d is None:
            raise DomainError("Either --d or --alpha is required")
        if d < 0:
            raise DomainError(f"d must be nonnegative, got {d}")
        return [found for found, _ in blocks(d, self.weight)]

    # -- combinatorics --------------------------------------------------------

    def blocks(self, d: int) -> list[BlockSummary]:
        summaries = []
        for alpha, members in blocks(d, self.weight):
            summaries.append(
                BlockSummary(
                    alpha=alpha,
                    defect=defect(self.weight, alpha),
                    members=members,
                    restricted=[mu for mu in members if is_restricted(mu, self.weight)],
                )
            )
        return summaries

    def specht_character(self, mu: Multipartition) -> QCharacter:
        return specht_qcharacter(self.check_multipartition(mu), self.weight)

    def crystal(self, d: int) -> CrystalGraph:
        return crystal_graph(d, self.weight)

    def restricted(self, d: int, exact: bool = False) -> list[Multipartition]:
        if exact:
            return restricted_of_size(d, self.weight)
        return enumerate_restricted(d, self.weight)

    def mullineux(self, mu: Multipartition) -> Multipartition:
        return mullineux(self.check_multipartition(mu), self.weight)

    def graded_dimension(
        self, alpha: RootElement, i: ResidueSequence, j: ResidueSequence
    ) -> tuple[LaurentPoly, LaurentPoly]:
        """Both forms of qdim e(i) H_alpha e(j)."""
        alpha = self.normalize_alpha(alpha)
        i = tuple(self.weight.reduce(x) for x in i)
        j = tuple(self.weight.reduce(x) for x in j)
        return (
            block_graded_dimension(alpha, self.weight, i, j),
            block_graded_dimension(alpha, self.weight, i, j, dual=True),
        )

    async def graded_dimension_totals(
        self,
        alphas: list[RootElement],
    ) -> list[LaurentPoly]:
        """Total graded dimension of each block, one pool task per block."""
        return list(
            await asyncio.gather(
                *(self._run(compute_total, self.normalize_alpha(alpha), self.weight) for alpha in alphas)
            )
        )

    def fock_verify(self, dmax: int) -> list[Violation]:
        return verify_uqg_relations(dmax, self.weight)

    def fock_actions(self, mu: Multipartition) -> list[tuple[str, int, FockVector]]:
        """E_i M_mu and F_i M_mu for every residue that acts by a nonzero vector."""
        v = FockVector.basis(self.check_multipartition(mu))
        actions: list[tuple[str, int, FockVector]] = []
        for i in relevant_residues(mu.size, self.weight):
            for name, step in (("E", fock_E), ("F", fock_F)):
                image = step(i, v, self.weight)
                if image:
                    actions.append((name, i, image))
        return actions

    def seminormal(self, mu: Multipartition) -> tuple[KLRRep, list[Violation]]:
        rep = build_seminormal(self.check_multipartition(mu), self.weight)
        return rep, verify_klr_relations(rep, self.weight)

    # -- decomposition matrices ----------------------------------------------

    async def decomposition_matrix(
        self,
        alpha: RootElement,
        method: str,
    ) -> DecompositionMatrix:
        """One block by one route.

        Only the default route reads and writes the cache; the other routes
        always recompute so that their checks run on every call.
        """
        check_method(method, self.weight)
        if method != CACHED_METHOD:
            return await self._run(compute_matrix, alpha, self.weight, method)
        cached = self.cache.load(alpha, self.weight)
        if cached is not None:
            cached.method = method
            return cached
        matrix = await self._run(compute_matrix, alpha, self.weight, method)
        if self.cache.enabled:
            self.cache.store(matrix)
        return matrix

    async def decomposition_matrices(
        self, alphas: list[RootElement], method: str
    ) -> list[DecompositionMatrix]:
        """Blocks run concurrently on the pool; results keep the order of alphas."""
        return list(
            await asyncio.gather(
                *(self.decomposition_matrix(alpha, method) for alpha in alphas)
            )
        )

    async def irreducible_characters(
        self, alphas: list[RootElement], method: str
    ) -> list[tuple[DecompositionMatrix, dict[Multipartition, QCharacter]]]:
        matrices = await self.decomposition_matrices(alphas, method)
        characters = await asyncio.gather(
            *(self._run(compute_irreducibles, matrix) for matrix in matrices)
        )
        return list(zip(matrices, characters))

    def content_of(self, mu: Multipartition) -> RootElement:
        return content(self.check_multipartition(mu), self.weight)
