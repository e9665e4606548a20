"""FastAPI service for the sparse-grid solver."""
