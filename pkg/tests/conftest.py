# tests/conftest.py
import sys
import os

from hypothesis import settings

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# exhaustive checks inside a property can take a while on 7 vertices
settings.register_profile("alliance", deadline=None, max_examples=60)
settings.load_profile("alliance")
