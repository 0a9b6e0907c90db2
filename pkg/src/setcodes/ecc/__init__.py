from setcodes.ecc.hamming import HammingCode, hamming_correct, hamming_redundancy, redundancy_bits
from setcodes.ecc.reed_solomon import RsCode, rs_correct, rs_redundancy

__all__ = [
    "HammingCode",
    "RsCode",
    "hamming_correct",
    "hamming_redundancy",
    "redundancy_bits",
    "rs_correct",
    "rs_redundancy",
]
