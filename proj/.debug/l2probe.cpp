#include <chrono>
#include <iostream>

#include "pidisc/fiber.hpp"
#include "pidisc/weyl.hpp"

using namespace pidisc;

int main() {
    using clock = std::chrono::steady_clock;
    FieldSpec f17 = FieldSpec::prime(17);
    WeylParams p;
    p.field = f17;
    p.lambda = {2};
    p.epsilon = {Scalar::from_int(f17, -1), Scalar::from_int(f17, -1)};
    p.chi.assign(2, {Scalar::one(f17), Scalar::one(f17)});
    auto t0 = clock::now();
    WeylAlgebra w = build_weyl(p);
    std::cout << "build: " << std::chrono::duration<double>(clock::now() - t0).count() << "s\n";

    std::vector<TraceMap> traces = {TraceMap::regular(w.alg), TraceMap::reduced(w.alg, 4)};
    t0 = clock::now();
    GramMatrix g0 = gram(w.alg, traces[0]);
    GramMatrix g1 = gram(w.alg, traces[1]);
    std::cout << "grams: " << std::chrono::duration<double>(clock::now() - t0).count() << "s\n";
    std::vector<const GramMatrix*> gp = {&g0, &g1};

    Rng rng(0);
    auto pt = [&](long long a, long long b, long long c, long long d) {
        return std::vector<Scalar>{Scalar::from_int(f17, a), Scalar::from_int(f17, b),
                                   Scalar::from_int(f17, c), Scalar::from_int(f17, d)};
    };
    // a few points: Z1 = 1-4*Y1*X1, Z2 = 1-4*Y1*X1-4*Y2*X2, coords (X1,Y1,X2,Y2)
    for (auto point : {pt(0, 0, 0, 0), pt(1, 13, 0, 0), pt(1, 13, 1, 1), pt(1, 1, 3, 1)}) {
        t0 = clock::now();
        FiberReport r = analyze_point(w.alg, traces, point, rng, 4, true, gp);
        std::cout << "point (" << point[0].str() << "," << point[1].str() << "," << point[2].str()
                  << "," << point[3].str() << "): dim " << r.dim << " ss " << r.ss_dim << " az "
                  << r.azumaya << " pred " << azumaya_predicate(w, point) << " irr [";
        for (auto v : r.irreducibles) std::cout << v << " ";
        std::cout << "] k [";
        if (r.k_m)
            for (auto v : *r.k_m) std::cout << v << " ";
        std::cout << "] " << std::chrono::duration<double>(clock::now() - t0).count() << "s\n";
    }
    return 0;
}
