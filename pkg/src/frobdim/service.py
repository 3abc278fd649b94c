"""HTTP service exposing the decision pipeline.

Run with:  uvicorn frobdim.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .api import (InstanceSpec, RingSpec, decide_report, ext_table_report,
                  invariants_report, oracle_report, tor_table_report)
from .errors import ParseError, ResourceLimitExceeded

app = FastAPI(title="frobdim", version=__version__)


class RingRequest(BaseModel):
    ring: RingSpec
    budget: int | None = Field(default=None, ge=1)


class InstanceRequest(BaseModel):
    instance: InstanceSpec
    budget: int | None = Field(default=None, ge=1)


@app.exception_handler(ParseError)
async def _parse_error(request: Request, exc: ParseError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": str(exc)})


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": str(exc)})


@app.exception_handler(ResourceLimitExceeded)
async def _resource_error(request: Request,
                          exc: ResourceLimitExceeded) -> JSONResponse:
    return JSONResponse(status_code=422, content={"error": str(exc)})


@app.get("/v1/health")
async def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/v1/invariants")
async def invariants(request: RingRequest) -> dict:
    return invariants_report(request.ring, budget_steps=request.budget)


@app.post("/v1/tor-table")
async def tor_table(request: InstanceRequest) -> dict:
    return tor_table_report(request.instance, budget_steps=request.budget)


@app.post("/v1/ext-table")
async def ext_table(request: InstanceRequest) -> dict:
    return ext_table_report(request.instance, budget_steps=request.budget)


@app.post("/v1/decide")
async def decide(request: InstanceRequest) -> dict:
    return decide_report(request.instance, budget_steps=request.budget)


@app.post("/v1/oracle")
async def oracle(request: InstanceRequest) -> dict:
    return oracle_report(request.instance, budget_steps=request.budget)
