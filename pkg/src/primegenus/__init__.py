"""Finite group actions of order divisible by p on surfaces of genus p+1."""
from .census import CaseRecord, classify, hypermap_census, nonorientable_census, verify_embedded_tables
from .epi import count_kernels, enumerate_epimorphisms
from .groups import group
from .signatures import Signature, enumerate_signatures, parse_signature

__all__ = ["CaseRecord", "Signature", "classify", "count_kernels", "enumerate_epimorphisms",
           "enumerate_signatures", "group", "hypermap_census", "nonorientable_census", "parse_signature",
           "verify_embedded_tables"]
