#include "scopebind/frontend.hpp"

namespace scopebind {

std::string_view lennart_source() {
    static constexpr std::string_view src = R"(let Zero = \z.\s.z;
    Succ = \n.\z.\s.s n;
    one = Succ Zero;
    two = Succ one;
    three = Succ two;
    isZero = \n.n true (\m.false);
    const = \x.\y.x;
    Pair = \a.\b.\p.p a b;
    fst = \ab.ab (\a.\b.a);
    snd = \ab.ab (\a.\b.b);
    fix = \ g. (\ x. g (x x)) (\ x. g (x x));
    add = fix (\radd.\x.\y.
                 x y (\ n. Succ (radd n y)));
    mul = fix (\rmul.\x.\y.
                 x Zero (\ n. add y (rmul n y)));
    fac = fix (\rfac.\x. x one (\ n. mul x (rfac n)));
    eqnat = fix (\reqnat.\x.\y.
                   x (y true (const false))
                       (\x1.y false (\y1.reqnat x1 y1)));
    sumto = fix (\rsumto.\x.
                   x Zero (\n.add x (rsumto n)));
    n5 = add two three;
    n6 = add three three;
    n17 = add n6 (add n6 n5);
    n37 = Succ (mul n6 n6);
    n703 = sumto n37;
    n720 = fac n6
in  eqnat n720 (add n703 n17)
)";
    return src;
}

Term lennart_term() {
    using namespace named;
    auto v = [](const char* n) { return var(n); };
    auto ap = [](NamedPtr f, std::initializer_list<NamedPtr> args) { return apps(std::move(f), args); };
    auto fix_of = [&](NamedPtr f) { return app(v("fix"), std::move(f)); };

    const NamedPtr self = lam("x", app(v("g"), app(v("x"), v("x"))));
    std::vector<std::pair<std::string, NamedPtr>> defs{
        {"Zero", lams({"z", "s"}, v("z"))},
        {"Succ", lams({"n", "z", "s"}, app(v("s"), v("n")))},
        {"one", app(v("Succ"), v("Zero"))},
        {"two", app(v("Succ"), v("one"))},
        {"three", app(v("Succ"), v("two"))},
        {"isZero", lam("n", ap(v("n"), {boolean(true), lam("m", boolean(false))}))},
        {"const", lams({"x", "y"}, v("x"))},
        {"Pair", lams({"a", "b", "p"}, ap(v("p"), {v("a"), v("b")}))},
        {"fst", lam("ab", app(v("ab"), lams({"a", "b"}, v("a"))))},
        {"snd", lam("ab", app(v("ab"), lams({"a", "b"}, v("b"))))},
        {"fix", lam("g", app(self, self))},
        {"add", fix_of(lams({"radd", "x", "y"},
                            ap(v("x"), {v("y"), lam("n", app(v("Succ"), ap(v("radd"), {v("n"), v("y")})))})))},
        {"mul", fix_of(lams({"rmul", "x", "y"},
                            ap(v("x"), {v("Zero"), lam("n", ap(v("add"), {v("y"), ap(v("rmul"), {v("n"), v("y")})}))})))},
        {"fac", fix_of(lams({"rfac", "x"},
                            ap(v("x"), {v("one"), lam("n", ap(v("mul"), {v("x"), app(v("rfac"), v("n"))}))})))},
        {"eqnat", fix_of(lams({"reqnat", "x", "y"},
                              ap(v("x"), {ap(v("y"), {boolean(true), app(v("const"), boolean(false))}),
                                          lam("x1", ap(v("y"), {boolean(false),
                                                                lam("y1", ap(v("reqnat"), {v("x1"), v("y1")}))}))})))},
        {"sumto", fix_of(lams({"rsumto", "x"},
                              ap(v("x"), {v("Zero"), lam("n", ap(v("add"), {v("x"), app(v("rsumto"), v("n"))}))})))},
        {"n5", ap(v("add"), {v("two"), v("three")})},
        {"n6", ap(v("add"), {v("three"), v("three")})},
        {"n17", ap(v("add"), {v("n6"), ap(v("add"), {v("n6"), v("n5")})})},
        {"n37", app(v("Succ"), ap(v("mul"), {v("n6"), v("n6")}))},
        {"n703", app(v("sumto"), v("n37"))},
        {"n720", app(v("fac"), v("n6"))},
    };
    NamedPtr body = ap(v("eqnat"), {v("n720"), ap(v("add"), {v("n703"), v("n17")})});
    return scope_check(*let(defs, body));
}

}  // namespace scopebind
