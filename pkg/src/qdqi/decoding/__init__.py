"""综合征译码"""

from qdqi.decoding.decoder import (
    DecodeRecord,
    SyndromeCode,
    SyndromeDecoder,
    decode_brute,
    dual_min_distance,
    verify_unique_decoding,
)

__all__ = [
    "DecodeRecord",
    "SyndromeCode",
    "SyndromeDecoder",
    "decode_brute",
    "dual_min_distance",
    "verify_unique_decoding",
]
