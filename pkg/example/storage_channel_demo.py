"""
Set Codes: Storage Channel Demo
================================

Writes a message as an unordered set of strands, shuffles and corrupts them
the way a storage read-out would, and decodes the message back.

Run:
    python example/storage_channel_demo.py
"""

from setcodes import Params, Word, apply_pattern, build_codec
from setcodes.core.patterns import random_pattern, trial_rng
from setcodes.codecs.message import int_to_hex
from setcodes.errors import DecodeError
from setcodes.logs import configure_logging


def main() -> None:
    configure_logging("INFO")
    rng = trial_rng(seed=2024, trial=0)

    # ──────────────────────────────────────────────────────────────
    # Step 1: One code per substitution budget
    # ──────────────────────────────────────────────────────────────
    setups = [
        ("single", Params(M=16, L=48, K=1)),
        ("single-improved", Params(M=16, L=32, K=1)),
        ("multi", Params(M=128, L=70, K=2)),
        ("anchor", Params(M=2, L=64, K=1)),
    ]

    for name, params in setups:
        codec = build_codec(name, params)
        print(f"\n{name}: M={params.M} L={params.L} K={params.K}")
        print(f"   • message bits : {codec.message_space_log2():.1f}")
        print(f"   • redundancy   : {codec.redundancy():.2f} bits")

        # ──────────────────────────────────────────────────────────
        # Step 2: Write, lose the order, flip K bits, read back
        # ──────────────────────────────────────────────────────────
        msg = codec.random_message(rng)
        word = codec.encode(msg)
        strands = list(word)
        strands = [strands[i] for i in rng.permutation(len(strands))]
        # the read-out order carries no information
        assert Word.of(strands) == word
        received = apply_pattern(word, random_pattern(params.M, params.L, codec.budget, rng))

        try:
            decoded = codec.decode(received)
            status = "recovered" if decoded == msg else "MISCORRECTED"
        except DecodeError as e:
            status = f"failed ({e.reason})"
        print(f"   • message      : {int_to_hex(codec.pack(msg))[:32]}…")
        print(f"   • after {codec.budget} flip(s): {status}")


if __name__ == "__main__":
    main()
