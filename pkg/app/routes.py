# app/routes.py
from typing import Any, Dict, List, Optional

from fastapi import APIRouter, HTTPException, Query
from pydantic import BaseModel, Field

from app import services
from app.alliance import NEUTRALS_BOTH
from app.cache import ReportCache
from app.errors import AllianceLabError
from app.graph import serialize_edge_list
from app.harness import ERRATA_MAX_N, GALLAI_FRAMEWORK, VERIFY_MAX_N
from app.solvers import AUTO, MIN

router = APIRouter()
report_cache = ReportCache()


class Selection(BaseModel):
    graph: str = Field(..., description="edge-list text: 'n m' header then m lines 'u v'")
    name: Optional[str] = None
    params: Dict[str, Any] = Field(default_factory=dict)
    D: Optional[str] = None
    O: Optional[str] = None
    is_global: bool = Field(False, alias="global")
    nonempty: bool = False
    neutrals: Optional[str] = None
    power: int = Field(1, ge=1)
    neutral_mode: str = NEUTRALS_BOTH


class CheckRequest(Selection):
    set: str = ""


class SolveRequest(Selection):
    objective: str = MIN
    method: str = AUTO
    stats: bool = False


class PropagateRequest(BaseModel):
    graph: str
    seeds: str = ""
    rounds: Optional[int] = Field(None, ge=0)
    thresholds: Optional[str] = None
    strict: bool = False


class GallaiRequest(BaseModel):
    graph: str
    reading: str = GALLAI_FRAMEWORK


def _params(raw: Dict[str, Any]) -> Dict[str, object]:
    return services.parse_params([f"{k}={v}" for k, v in raw.items()])


def _predicate(req: Selection, g):
    neutrals = services.parse_set(req.neutrals, g) if req.neutrals is not None else None
    params = _params(req.params)
    predicate = services.resolve_predicate(
        req.name, params, req.D, req.O, req.is_global, req.nonempty, neutrals, req.power, req.neutral_mode
    )
    return predicate, params


@router.get("/catalog")
def get_catalog() -> Dict[str, Any]:
    try:
        return {"entries": services.catalog_listing()}
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Catalog listing failed: {e}")


@router.post("/check")
def check(req: CheckRequest) -> Dict[str, Any]:
    try:
        g = services.load_graph(text=req.graph)
        predicate, params = _predicate(req, g)
        return services.run_check(g, services.parse_set(req.set, g), predicate, req.name, params)
    except AllianceLabError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Check failed: {e}")


@router.post("/solve")
def solve(req: SolveRequest) -> Dict[str, Any]:
    try:
        g = services.load_graph(text=req.graph)
        predicate, _ = _predicate(req, g)
        return services.run_solve(g, predicate, req.objective, req.method, req.stats)
    except AllianceLabError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Solve failed: {e}")


@router.post("/propagate")
def propagate(req: PropagateRequest) -> Dict[str, Any]:
    try:
        g = services.load_graph(text=req.graph)
        return services.run_propagate(g, services.parse_set(req.seeds, g), req.rounds, req.thresholds, req.strict)
    except AllianceLabError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Propagation failed: {e}")


@router.get("/verify")
def verify(
    n_max: int = Query(4, ge=1, le=VERIFY_MAX_N),
    prop: Optional[str] = None,
    family: Optional[str] = None,
    param: Optional[List[str]] = Query(None),
) -> Dict[str, Any]:
    try:
        if prop is None and n_max > ERRATA_MAX_N:
            raise HTTPException(status_code=400, detail=f"the full scan is capped at n_max={ERRATA_MAX_N}")
        param = param or []
        key = (n_max, prop, family, tuple(sorted(param)))
        cached = report_cache.get(key)
        if cached is not None:
            return cached
        result = services.run_verify(n_max, prop, family, services.parse_params(param))
        report_cache.set(key, result)
        return result
    except HTTPException:
        raise
    except AllianceLabError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Verification failed: {e}")


@router.post("/gallai")
def gallai(req: GallaiRequest) -> Dict[str, Any]:
    try:
        g = services.load_graph(text=req.graph)
        return services.run_gallai(g, req.reading)
    except AllianceLabError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Gallai check failed: {e}")


@router.get("/generate")
def generate(kind: str, params: str = "", seed: Optional[int] = None) -> Dict[str, Any]:
    try:
        g = services.parse_graph_spec(f"{kind}:{params}", seed)
        return {"n": g.n, "m": g.m, "edgelist": serialize_edge_list(g)}
    except AllianceLabError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Generation failed: {e}")
