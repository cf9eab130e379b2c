"""FastAPI surface over the handler layer; heavy objects are cached per process."""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import handlers, models

app = FastAPI(
    title="brauerlab",
    description="Brauer-type algebras of reflection groups: exact bases, "
                "Lawrence-Krammer representations, KZ flatness, cellular and "
                "semisimplicity verification.",
    version="0.1.0",
)


def _run(fn, req):
    try:
        return fn(req)
    except (ValueError, KeyError, AssertionError, ArithmeticError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/healthz")
def healthz():
    return {"status": "ok"}


@app.post("/group", response_model=models.GroupInfoResponse)
def group(req: models.GroupRequest):
    return _run(handlers.group_info, req)


@app.post("/algebra", response_model=models.AlgebraResponse)
def algebra(req: models.AlgebraRequest):
    return _run(handlers.algebra, req)


@app.post("/relations", response_model=models.RelationsResponse)
def relations(req: models.RelationsRequest):
    return _run(handlers.relations, req)


@app.post("/lk-rep", response_model=models.RepResponse)
def lk_rep(req: models.RepRequest):
    return _run(handlers.lk_rep_info, req)


@app.post("/h3-rep", response_model=models.RepResponse)
def h3_rep(req: models.RepRequest):
    return _run(handlers.h3_rep_info, req)


@app.post("/flatness", response_model=models.FlatnessResponse)
def flatness(req: models.FlatnessRequest):
    return _run(handlers.flatness, req)


@app.post("/cellular", response_model=models.CellularResponse)
def cellular(req: models.CellularRequest):
    return _run(handlers.cellular, req)


@app.post("/semisimple", response_model=models.SemisimpleResponse)
def semisimple(req: models.SemisimpleRequest):
    return _run(handlers.semisimple, req)


@app.post("/cyclo-compare", response_model=models.CycloCompareResponse)
def cyclo_compare(req: models.CycloCompareRequest):
    return _run(handlers.cyclo_compare, req)


@app.post("/verify-all", response_model=models.VerifyAllResponse)
def verify_all(req: models.VerifyAllRequest):
    return _run(handlers.verify_all, req)
