# src/algebraicgalois/__init__.py
# This makes 'algebraicgalois' a package.