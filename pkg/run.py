import os

import uvicorn

from app.main import app

if __name__ == "__main__":
    uvicorn.run(
        "run:app",
        host=os.getenv("SKEWCHAR_HOST", "127.0.0.1"),
        port=int(os.getenv("SKEWCHAR_PORT", "8000")),
    )
