"""Smoke test for the `ado` extension module. Run after building it with maturin."""

import json

import ado


def main():
    trefoil = ado.Braid.knot("trefoil")
    assert trefoil.letters == [1, 1, 1] and trefoil.writhe == 3

    direct = ado.invariant(trefoil, 2)
    topo = ado.invariant(trefoil, 2, "topological")
    assert direct == topo
    assert str(direct) == "s^-2 - 1 + s^2", str(direct)
    assert direct.t_exp == 0 and direct.is_laurent()
    assert abs(direct.evaluate(0.5) + 1) < 1e-12
    json.loads(direct.to_json())

    fig8 = ado.Braid.parse("1 -2 1 -2")
    assert ado.alexander(fig8) == (-1, [-1, 3, -1])
    assert ado.invariant(fig8, 3) == ado.invariant(fig8, 3, "topological")
    assert ado.markov_check(fig8, 2, samples=3, seed=7)
    assert abs(abs(ado.invariant(fig8, 3).evaluate(2)) - abs(ado.kashaev_figure_eight(3))) < 1e-9

    try:
        ado.Braid(2, [2])
    except ValueError:
        pass
    else:
        raise AssertionError("generator out of range accepted")

    print("ok:", ", ".join(f"{k}: {ado.invariant(ado.Braid.knot(k), 2)}" for k in ado.KNOTS))


if __name__ == "__main__":
    main()
