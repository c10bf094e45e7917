# src/algebraicgalois/core/__init__.py