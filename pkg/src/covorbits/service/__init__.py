"""HTTP layer: FastAPI application and its request/response schemas."""
