# main.py
from dotenv import load_dotenv
load_dotenv()

import logging
import os
import time
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware

from app.catalog import CATALOG
from app.harness import ERRATA_MAX_N, PROPOSITIONS, VERIFY_MAX_N
from app.routes import router as alliance_router

logging.basicConfig(
    format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
    level=os.getenv("ALLIANCE_LOG_LEVEL", "INFO").upper(),
)
logger = logging.getLogger("alliance-lab")

app = FastAPI(title="Alliance Lab", version="0.1")

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)


@app.middleware("http")
async def time_requests(request: Request, call_next):
    start = time.perf_counter()
    response = await call_next(request)
    elapsed = time.perf_counter() - start
    query = f"?{request.url.query}" if request.url.query else ""
    logger.info(f"{request.method} {request.url.path}{query} status={response.status_code} elapsed={elapsed:.3f}s")
    response.headers["X-Process-Time"] = f"{elapsed:.3f}"
    return response


@app.get("/")
def read_root():
    return {
        "message": "Alliance Lab is running",
        "docs": "/docs",
        "parameters": len(CATALOG),
        "propositions": sorted(PROPOSITIONS),
        "limits": {"verify_n_max": VERIFY_MAX_N, "scan_n_max": ERRATA_MAX_N},
    }


app.include_router(alliance_router, tags=["alliances"])

if __name__ == "__main__":
    import uvicorn
    uvicorn.run("main:app", host="0.0.0.0", port=int(os.getenv("PORT", 8000)))
