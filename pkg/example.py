"""Example usage of Vandermonde b-functions."""

from src import (
    BernsteinOracle,
    BFunctionEngine,
    Config,
    InvariantSuite,
    budur_check,
    degrees,
    opdam_bg,
    verify_all,
)
from src.invariants import reports_to_frame
from src.weyl_oracle import essential_vandermonde


def run_example_analysis() -> None:
    """Walk through the main computations for small n."""
    config = Config()
    engine = BFunctionEngine(config)

    print("1. Conjectured b-functions:")
    for n in range(2, 6):
        print(f"   n={n}: {engine.b_xi(n)}")

    print("\n2. Bounds around b_xi(4):")
    print(f"   blow-up:     {engine.blowup_b(4)}")
    print(f"   upper bound: {engine.upper_bound_b(4)}")
    print(f"   Kashiwara cover (N, M): {engine.kashiwara_cover(4)}")

    print("\n3. Discriminant of A3 on the quotient:")
    bg = opdam_bg(degrees('A3'))
    print(f"   b_g = {bg}")
    print(f"   divides b_xi(4)(2s+1): {budur_check(bg, engine.b_xi(4))}")

    print("\n4. Invariant suite up to n=6:")
    reports = InvariantSuite(engine=engine).run(6)
    print(reports_to_frame(reports)[['n', 'min_jump', 'kashiwara', 'passed']].to_string(index=False))

    print("\n5. Symbol identities for n=4:")
    print(verify_all(4)[['identity', 'k', 'kind', 'passed']].to_string(index=False))

    print("\n6. Bernstein operator for xi_3 (this takes a few seconds)...")
    result = BernsteinOracle(config).find_bernstein(essential_vandermonde(3))
    print(f"   b = {result.describe()}")
    print(f"   L = {result.certificate}")

    print("\n✓ Done.")


if __name__ == "__main__":
    run_example_analysis()
