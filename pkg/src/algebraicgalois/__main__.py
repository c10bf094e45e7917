# src/algebraicgalois/__main__.py
from .cli.main import app

if __name__ == "__main__":
    app()
