"""
Reading and writing .praaf documents.
"""

from .parser import PraafDocument, Statement, parse_document, parse_praaf
from .writer import export_dot, serialize_praaf

__all__ = ['PraafDocument', 'Statement', 'parse_document', 'parse_praaf', 'export_dot', 'serialize_praaf']
