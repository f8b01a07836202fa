"""HTTP API over one workspace.

Single-workspace service: one ingested dataset plus its stored solutions.
All GET endpoints are side-effect-free and return identical bodies for
identical workspace state; every response body carries a schema_version
field. Unknown query parameters are rejected with 400.

Error mapping: unknown resources are 404, validation failures 400,
conflicts 409, and 503 when no workspace is loaded.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import FileResponse, JSONResponse

from . import errors as err
from .evaluation import DEFAULT_CRITERION
from .linkage import Workspace
from .stopwords import DEFAULT_STOPWORDS
from .vizprep import pair_view

SCHEMA_VERSION = 1

_STATUS = {
    err.UnknownMethod: 404,
    err.UnknownSource: 404,
    err.UnknownIdentity: 404,
    err.NoCandidates: 404,
    err.DuplicateMethodId: 409,
    err.PlatformMismatch: 409,
    err.WorkspaceNotLoaded: 503,
}


def _status_for(exc: err.LinkyError) -> int:
    for klass, status in _STATUS.items():
        if isinstance(exc, klass):
            return status
    if isinstance(exc, err.DataError):
        return 400
    return 500


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"schema_version": SCHEMA_VERSION, "code": code, "message": message},
    )


def _summary_json(summary) -> dict:
    desc = summary.descriptor
    report = summary.report
    return {
        "method_id": desc.method_id,
        "display_name": desc.display_name,
        "origin": desc.origin,
        "parameters": desc.parameters,
        "source_platform": summary.source_platform,
        "target_platform": summary.target_platform,
        "prec_at_1": report.prec_at_1 if report else None,
        "mrr": report.mrr if report else None,
        "n_evaluated": report.n_evaluated if report else 0,
    }


def create_app(
    workspace: Workspace | None,
    stopwords=None,
    topk_default: int = 3,
    cors_origin: str | None = None,
) -> FastAPI:
    app = FastAPI(title="linky", docs_url=None, redoc_url=None, openapi_url=None)
    app.state.workspace = workspace
    app.state.stopwords = DEFAULT_STOPWORDS if stopwords is None else stopwords
    app.state.topk_default = topk_default
    app.state.import_lock = threading.Lock()

    if cors_origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_origin],
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )

    @app.exception_handler(err.LinkyError)
    async def _linky_error(_request, exc: err.LinkyError):
        return _error_response(_status_for(exc), exc.code, str(exc))

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_request, exc: RequestValidationError):
        return _error_response(400, "invalid_request", str(exc.errors()[:1]))

    def _workspace() -> Workspace:
        ws = app.state.workspace
        if ws is None:
            raise err.WorkspaceNotLoaded("no workspace loaded")
        return ws

    def _check_params(request: Request, allowed: set):
        unknown = set(request.query_params) - allowed
        if unknown:
            raise err.InvalidParameter(f"unknown query parameters: {sorted(unknown)}")

    # -- solutions ------------------------------------------------------

    @app.get("/api/solutions")
    def list_solutions(request: Request):
        _check_params(request, set())
        ws = _workspace()
        return {
            "schema_version": SCHEMA_VERSION,
            "solutions": [_summary_json(s) for s in ws.list_methods()],
        }

    @app.post("/api/solutions", status_code=201)
    async def upload_solution(request: Request, replace: bool = False):
        _check_params(request, {"replace"})
        ws = _workspace()
        content_type = request.headers.get("content-type", "")
        if content_type.startswith("multipart/form-data"):
            form = await request.form()
            upload = form.get("file")
            if upload is None:
                raise err.MalformedSolution("multipart upload needs a 'file' field")
            text = (await upload.read()).decode("utf-8")
        else:
            text = (await request.body()).decode("utf-8")
        with app.state.import_lock:
            solution = ws.import_text(text, replace=replace)
            summary = [s for s in ws.list_methods() if s.descriptor.method_id == solution.method.method_id][0]
        return {"schema_version": SCHEMA_VERSION, "solution": _summary_json(summary)}

    # -- identity search ------------------------------------------------

    @app.get("/api/identities/search")
    def search_identities(request: Request, platform: str, q: str = "", limit: int = 20):
        _check_params(request, {"platform", "q", "limit"})
        ws = _workspace()
        if limit < 1:
            raise err.InvalidParameter(f"limit must be >= 1, got {limit}")
        identities = ws.dataset.identities_of(platform)
        needle = q.lower()
        matches = []
        for ident in identities:
            fields = [ident.username.lower()]
            if ident.screen_name:
                fields.append(ident.screen_name.lower())
            best = None
            for text in fields:
                if needle == text:
                    tier = 0
                elif text.startswith(needle):
                    tier = 1
                elif needle in text:
                    tier = 2
                else:
                    continue
                best = tier if best is None else min(best, tier)
            if best is not None:
                matches.append((best, ident.username.lower(), ident.user_id, ident))
        matches.sort(key=lambda m: m[:3])
        return {
            "schema_version": SCHEMA_VERSION,
            "identities": [
                {
                    "platform": ident.platform,
                    "user_id": ident.user_id,
                    "username": ident.username,
                    "screen_name": ident.screen_name,
                }
                for _, _, _, ident in matches[:limit]
            ],
        }

    # -- pair views -----------------------------------------------------

    @app.get("/api/solutions/{method_id}/pairs/{source_id}")
    def get_pair(request: Request, method_id: str, source_id: str, k: int | None = None):
        _check_params(request, {"k"})
        ws = _workspace()
        k = app.state.topk_default if k is None else k
        if k < 1:
            raise err.InvalidParameter(f"k must be >= 1, got {k}")
        view = pair_view(ws, method_id, source_id, k=k, stopwords=app.state.stopwords)
        body = view.to_json()
        body["schema_version"] = SCHEMA_VERSION
        return body

    # -- diffs ----------------------------------------------------------

    @app.get("/api/solutions/{method_id}/diff")
    def get_diff(request: Request, method_id: str, against: str, criterion: str = DEFAULT_CRITERION):
        _check_params(request, {"against", "criterion"})
        ws = _workspace()
        report = ws.diff(method_id, against, criterion)
        dataset = ws.dataset
        source_platform = ws.solution(method_id).source_platform
        return {
            "schema_version": SCHEMA_VERSION,
            "method_a": report.method_a,
            "method_b": report.method_b,
            "criterion": report.criterion,
            "sources": [
                {"source_id": sid, "username": dataset.identity(source_platform, sid).username}
                for sid in report.correct_in_a_not_b
            ],
        }

    # -- profile images -------------------------------------------------

    @app.get("/api/identities/{platform}/{user_id}/image")
    def get_image(request: Request, platform: str, user_id: str):
        _check_params(request, set())
        ws = _workspace()
        ident = ws.dataset.identity(platform, user_id)
        if ident.profile_image_ref:
            path = Path(ident.profile_image_ref)
            if not path.is_absolute():
                path = ws.root / path
            if path.is_file():
                return FileResponse(path)
        return _error_response(404, "no_image", "identity has no profile image; use a placeholder")

    return app


def serve(
    workspace: Workspace | None,
    host: str = "127.0.0.1",
    port: int = 8040,
    stopwords=None,
    topk_default: int = 3,
    cors_origin: str | None = None,
) -> None:
    """Run the API with uvicorn; blocks until interrupted."""
    import uvicorn

    app = create_app(workspace, stopwords=stopwords, topk_default=topk_default, cors_origin=cors_origin)
    uvicorn.run(app, host=host, port=port, log_level="warning")
