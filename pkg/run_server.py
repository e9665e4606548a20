"""Run the solver server."""

import os

import uvicorn

if __name__ == "__main__":
    uvicorn.run(
        "src.api.main:app",
        host=os.environ.get("SPARSE_SWEEP_HOST", "0.0.0.0"),
        port=int(os.environ.get("SPARSE_SWEEP_PORT", "8000")),
        log_level=os.environ.get("SPARSE_SWEEP_LOG_LEVEL", "info"),
    )
