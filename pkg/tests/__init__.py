# tests/__init__.py

# Marks tests/ as a package so the modules share one import root.
