"""FastAPI application serving benchmark solves and refinement studies."""

from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from .routes import initialize_catalog, router

VERSION = "1.0.0"


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Build the benchmark catalog on startup."""
    initialize_catalog()
    yield


app = FastAPI(
    title="Sparse-Grid Fast Sweeping Solver",
    description="Fixed-point fast sweeping WENO solves of static Hamilton-Jacobi equations on sparse grids",
    version=VERSION,
    lifespan=lifespan,
)

# CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(router, prefix="/api", tags=["solver"])


@app.get("/")
async def root():
    """Root endpoint."""
    return {
        "message": "Sparse-Grid Fast Sweeping Solver",
        "version": VERSION,
        "endpoints": {
            "benchmarks": "/api/benchmarks",
            "solve": "/api/solve",
            "study_stream": "/api/study_stream",
        },
    }


@app.get("/health")
async def health():
    """Health check endpoint."""
    return {"status": "healthy"}


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
