"""HTTP facade over the search pipeline.

Read-only, three endpoints: search, record lookup, health. Query
parameters are parsed by hand so every client mistake comes back as a
400 with a machine-readable error code instead of framework-flavored
validation output. The index is shared and immutable, so request
handling is lock-free and stateless.
"""

import re

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .corpus import MAX_CLASS, MIN_CLASS, record_to_obj
from .errors import EmptyQueryError
from .index import Index
from .profiles import BUILTIN_PROFILES, EngineProfile
from .search import search_normalized
from .normalize import normalize

_SERIAL_RE = re.compile(r"[A-Za-z0-9._-]+\Z")


class ResultItem(BaseModel):
    serial: str
    mark: str
    status: str
    classes: list[int]
    owner: str | None
    score: float
    band: str
    exact_match: bool
    phonetic_match: bool
    levenshtein: int
    rank: int


class SearchResponse(BaseModel):
    query: str
    normalized: str
    total: int
    truncated: bool
    results: list[ResultItem]


class HealthResponse(BaseModel):
    status: str
    records: int


class ErrorBody(BaseModel):
    error: str
    message: str


def _error(status_code: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status_code, content={"error": code, "message": message})


def _bad_param(message: str) -> JSONResponse:
    return _error(400, "BAD_PARAM", message)


def create_app(index: Index, profile: EngineProfile | None = None) -> FastAPI:
    """Build the service around one index and one engine profile."""
    engine = profile if profile is not None else BUILTIN_PROFILES["full"]
    app = FastAPI(title="knockmark", docs_url=None, redoc_url=None)
    app.state.index = index
    app.state.profile = engine
    # The web terminal is served statically from anywhere; the API is
    # read-only, so permissive GET-only CORS is safe.
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["GET"])

    @app.exception_handler(Exception)
    async def on_internal_error(request: Request, exc: Exception):
        return _error(500, "INTERNAL", f"{type(exc).__name__}: {exc}")

    @app.get("/api/v1/healthz", response_model=HealthResponse)
    def healthz():
        return HealthResponse(status="ok", records=len(index))

    @app.get(
        "/api/v1/search",
        response_model=SearchResponse,
        responses={400: {"model": ErrorBody}},
    )
    def search(
        q: str = "",
        limit: str = "100",
        classes: str = "",
        include_dead: str = "false",
        min_score: str = "0",
    ):
        try:
            limit_n = int(limit)
        except ValueError:
            return _bad_param(f"limit must be an integer, got {limit!r}")
        if limit_n < 1:
            return _bad_param("limit must be >= 1")

        class_set: frozenset[int] | None = None
        if classes:
            try:
                parsed = frozenset(int(part) for part in classes.split(","))
            except ValueError:
                return _bad_param(f"classes must be comma-separated integers, got {classes!r}")
            if any(not MIN_CLASS <= c <= MAX_CLASS for c in parsed):
                return _bad_param(f"classes must be within {MIN_CLASS}..{MAX_CLASS}")
            class_set = parsed

        if include_dead not in ("true", "false"):
            return _bad_param("include_dead must be 'true' or 'false'")

        try:
            min_score_f = float(min_score)
        except ValueError:
            return _bad_param(f"min_score must be a number, got {min_score!r}")
        if not 0.0 <= min_score_f <= 1.0:
            return _bad_param("min_score must be in [0, 1]")

        norm = normalize(q)
        if not norm.tokens:
            return _error(400, "EMPTY_QUERY", "query is empty after normalization")

        opts = engine.search_options(
            limit=None,
            include_dead=include_dead == "true",
            classes=class_set,
            min_score=min_score_f,
        )
        try:
            full = search_normalized(index, norm, opts)
        except EmptyQueryError:
            return _error(400, "EMPTY_QUERY", "query is empty after normalization")
        shown = full[:limit_n]
        return SearchResponse(
            query=q,
            normalized=norm.canonical,
            total=len(full),
            truncated=len(full) > limit_n,
            results=[
                ResultItem(
                    serial=r.serial,
                    mark=r.mark,
                    status=r.status.value,
                    classes=sorted(r.classes),
                    owner=r.owner,
                    score=float(f"{r.score:.4f}"),
                    band=r.band.value,
                    exact_match=r.exact_match,
                    phonetic_match=r.phonetic_match,
                    levenshtein=r.levenshtein,
                    rank=rank,
                )
                for rank, r in enumerate(shown, start=1)
            ],
        )

    @app.get("/api/v1/records/{serial}", responses={404: {"model": ErrorBody}})
    def record(serial: str):
        if not _SERIAL_RE.match(serial):
            return _bad_param("serial may contain only letters, digits, '.', '_', '-'")
        rec = index.by_serial.get(serial)
        if rec is None:
            return _error(404, "NOT_FOUND", f"no record with serial {serial!r}")
        return JSONResponse(content=record_to_obj(rec))

    return app
