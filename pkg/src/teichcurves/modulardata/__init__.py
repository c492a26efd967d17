"""Machine-readable tables: registry records, certification data and lookup tables."""

from .cert import CertData, ICParametrization, cached_cert, cert_from_json, load_cert
from .registry import (FUNDAMENTAL_DISCRIMINANTS, DiscriminantRecord, Finding, Homeotype,
                       RegistryError, check_discriminant, data_dir, is_fundamental, load_record,
                       load_registry, load_table, model_polynomial, validate_record)
from .serialize import poly_from_json, poly_to_json, to_jsonable
from .texpoly import TexParseError, parse_tex_poly, split_definition

__all__ = [
    "CertData", "ICParametrization", "cached_cert", "cert_from_json", "load_cert",
    "FUNDAMENTAL_DISCRIMINANTS", "DiscriminantRecord", "Finding", "Homeotype", "RegistryError",
    "check_discriminant", "data_dir", "is_fundamental", "load_record", "load_registry",
    "load_table", "model_polynomial", "validate_record", "poly_from_json", "poly_to_json",
    "to_jsonable", "TexParseError", "parse_tex_poly", "split_definition",
]
