"""
Pydantic models for matroid serialization.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel


class MatroidDocument(BaseModel):
    """JSON form of a matroid: bases when enumerated, else how it was built."""
    ground: List[str]
    rank: int
    bases: Optional[List[List[int]]] = None
    provenance: str
    parameters: Optional[Dict[str, Any]] = None


class PartitionDocument(BaseModel):
    """JSON form of a partition certificate or of its failure."""
    subset: List[str]
    independent: bool
    union_rank: int
    parts: Optional[List[List[str]]] = None
