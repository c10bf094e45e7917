# src/algebraicgalois/cli/__init__.py